"""Finite Kripke models for intuitionistic predicate logic and countermodel search.

Forcing is computed world-set-at-a-time: each subformula evaluates to a
bitmask of the worlds forcing it.  Enumeration covers rooted models only
(validity on all models coincides with validity on rooted ones) and drops
models that are images of an earlier one under a poset automorphism.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from .calculus import R, Base, CalculusConfig
from .syntax import (
    And, Atom, Bot, Exists, Fn, Forall, Formula, Imp, Or, Var, free_vars,
)

INDIVIDUALS = ("a", "b", "c")
MAX_WORLDS, MAX_DOMAIN, MAX_ATOMS = 4, 3, 3


class SemanticsError(ValueError):
    pass


class EnvIncomplete(SemanticsError):
    pass


class IndividualOutOfDomain(SemanticsError):
    pass


class BoundsTooLarge(SemanticsError):
    pass


class ModelClass(str, Enum):
    ALL_POSETS = "all"
    LINEAR = "linear"
    CONSTANT_DOMAIN = "constant"
    LINEAR_CONSTANT_DOMAIN = "linear-constant"

    @property
    def linear(self) -> bool:
        return self in (ModelClass.LINEAR, ModelClass.LINEAR_CONSTANT_DOMAIN)

    @property
    def constant_domain(self) -> bool:
        return self in (ModelClass.CONSTANT_DOMAIN, ModelClass.LINEAR_CONSTANT_DOMAIN)


@dataclass(frozen=True)
class KripkeModel:
    """Worlds are 0..n-1; `order` holds every pair (w, v) with w <= v."""
    n: int
    order: frozenset
    domains: tuple
    atoms: tuple
    constants: tuple = ()
    functions: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "order", frozenset(self.order))
        object.__setattr__(self, "domains", tuple(frozenset(d) for d in self.domains))
        object.__setattr__(self, "atoms", tuple(frozenset(a) for a in self.atoms))
        object.__setattr__(self, "constants", tuple(sorted(dict(self.constants).items())))
        object.__setattr__(self, "functions", tuple(sorted(dict(self.functions).items())))
        self._validate()

    def _validate(self):
        W = range(self.n)
        le = self.order
        if len(self.domains) != self.n or len(self.atoms) != self.n:
            raise ValueError("one domain and one atom set per world")
        for w in W:
            if (w, w) not in le:
                raise ValueError(f"order is not reflexive at {w}")
        for (u, v) in le:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"order mentions unknown world in {(u, v)}")
            if u != v and (v, u) in le:
                raise ValueError(f"order is not antisymmetric on {u}, {v}")
            for (v2, z) in le:
                if v2 == v and (u, z) not in le:
                    raise ValueError("order is not transitive")
        for (u, v) in le:
            if not self.domains[u] <= self.domains[v]:
                raise ValueError(f"domain of {u} not contained in domain of {v}")
            if not self.atoms[u] <= self.atoms[v]:
                raise ValueError(f"atoms true at {u} are not true at {v}")
        for w in W:
            for pred, args in self.atoms[w]:
                if not set(args) <= self.domains[w]:
                    raise ValueError(f"atom {pred}{args} at {w} mentions individuals outside the domain")
        for name, d in self.constants:
            if any(d not in self.domains[w] for w in W):
                raise ValueError(f"constant {name} must exist in every world")

    @property
    def worlds(self) -> range:
        return range(self.n)

    @cached_property
    def up(self) -> tuple:
        return tuple(sum(1 << v for v in range(self.n) if (w, v) in self.order) for w in range(self.n))

    @cached_property
    def full(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def individuals(self) -> tuple:
        return tuple(sorted(set().union(*self.domains))) if self.domains else ()

    @cached_property
    def exists_mask(self) -> dict:
        return {d: sum(1 << w for w in range(self.n) if d in self.domains[w]) for d in self.individuals}

    @cached_property
    def atom_masks(self) -> dict:
        masks = {}
        for w in range(self.n):
            for a in self.atoms[w]:
                masks[a] = masks.get(a, 0) | (1 << w)
        return masks

    def leq(self, w: int, v: int) -> bool:
        return (w, v) in self.order

    # evaluation
    def term_value(self, t, env: dict):
        if isinstance(t, Var):
            if t not in env:
                raise EnvIncomplete(f"no value for variable {t}")
            return env[t]
        args = tuple(self.term_value(a, env) for a in t.args)
        if not args:
            consts = dict(self.constants)
            if t.symbol not in consts:
                raise SemanticsError(f"constant {t.symbol} is not interpreted")
            return consts[t.symbol]
        funcs = dict(self.functions)
        key = (t.symbol, args)
        if key not in funcs:
            raise SemanticsError(f"{t.symbol}{args} is not interpreted")
        return funcs[key]

    def _mask(self, f: Formula, env: dict, defined: int) -> int:
        """Worlds (within `defined`, where env's individuals exist) forcing f."""
        if isinstance(f, Bot):
            return 0
        if isinstance(f, Atom):
            args = tuple(self.term_value(t, env) for t in f.args)
            return self.atom_masks.get((f.pred, args), 0) & defined
        if isinstance(f, And):
            return self._mask(f.left, env, defined) & self._mask(f.right, env, defined)
        if isinstance(f, Or):
            return self._mask(f.left, env, defined) | self._mask(f.right, env, defined)
        if isinstance(f, Imp):
            a = self._mask(f.left, env, defined)
            b = self._mask(f.right, env, defined)
            bad = a & ~b & defined
            return sum(1 << w for w in range(self.n) if defined >> w & 1 and not self.up[w] & bad)
        inner = dict(env)
        if isinstance(f, Forall):
            result = defined
            for d in self.individuals:
                here = defined & self.exists_mask[d]
                inner[f.var] = d
                bad = here & ~self._mask(f.body, inner, here)
                if bad:
                    result &= sum(1 << w for w in range(self.n) if not self.up[w] & bad)
            return result
        # Exists
        result = 0
        for d in self.individuals:
            here = defined & self.exists_mask[d]
            if here:
                inner[f.var] = d
                result |= self._mask(f.body, inner, here)
        return result

    def forced_worlds(self, f: Formula, env: dict | None = None) -> int:
        env = dict(env or {})
        missing = free_vars(f) - set(env)
        if missing:
            raise EnvIncomplete(f"no value for {', '.join(sorted(map(str, missing)))}")
        defined = self.full
        for v in env.values():
            if v not in self.exists_mask:
                raise IndividualOutOfDomain(f"{v} is in no domain")
            defined &= self.exists_mask[v]
        return self._mask(f, env, defined)


def forces(m: KripkeModel, w: int, env: dict, f: Formula) -> bool:
    for x, d in env.items():
        if d not in m.domains[w]:
            raise IndividualOutOfDomain(f"{x} = {d} is not in the domain of world {w}")
    return bool(m.forced_worlds(f, env) >> w & 1)


def valid_in(m: KripkeModel, f: Formula) -> bool:
    if free_vars(f):
        raise SemanticsError("valid_in needs a closed formula")
    return m.forced_worlds(f) == m.full


# ------------------------------------------------------------ enumeration

def _closure(n: int, strict: set) -> frozenset:
    rel = {(w, w) for w in range(n)} | set(strict)
    changed = True
    while changed:
        changed = False
        for (a, b) in list(rel):
            for (c, d) in list(rel):
                if b == c and (a, d) not in rel:
                    rel.add((a, d))
                    changed = True
    return frozenset(rel)


def _relabel(order: frozenset, perm: tuple) -> frozenset:
    return frozenset((perm[a], perm[b]) for a, b in order)


def rooted_posets(n: int, linear: bool = False) -> list:
    """Rooted posets on n worlds up to isomorphism, naturally labelled, root 0."""
    if linear:
        return [_closure(n, {(i, i + 1) for i in range(n - 1)})]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    seen, out = set(), []
    for bits in range(1 << len(pairs)):
        strict = {p for k, p in enumerate(pairs) if bits >> k & 1}
        order = _closure(n, strict)
        if order != frozenset(strict) | {(w, w) for w in range(n)}:
            continue  # only transitively closed subsets, each order once
        if any((0, w) not in order for w in range(n)):
            continue
        canon = min(tuple(sorted(_relabel(order, p))) for p in itertools.permutations(range(n)))
        if canon in seen:
            continue
        seen.add(canon)
        out.append(order)
    return out


def _automorphisms(n: int, order: frozenset) -> list:
    return [p for p in itertools.permutations(range(n)) if _relabel(order, p) == order and p != tuple(range(n))]


def _upsets(n: int, up: tuple) -> list:
    out = []
    for s in range(1 << n):
        if all(up[w] & ~s == 0 for w in range(n) if s >> w & 1):
            out.append(s)
    return out


def _nonempty_subsets(pool: tuple) -> list:
    subs = []
    for k in range(1, len(pool) + 1):
        subs.extend(frozenset(c) for c in itertools.combinations(pool, k))
    return subs


def _domain_assignments(n: int, order: frozenset, pool: tuple, constant: bool) -> list:
    if not pool:
        return [tuple(frozenset() for _ in range(n))]
    subsets = _nonempty_subsets(pool)
    # root domain is a prefix of the pool (individual renaming symmetry)
    roots = [frozenset(pool[:k]) for k in range(1, len(pool) + 1)]
    if constant:
        return [tuple(r for _ in range(n)) for r in roots]
    out = []
    for root in roots:
        for rest in itertools.product(subsets, repeat=n - 1):
            doms = (root,) + rest
            if all(doms[a] <= doms[b] for a, b in order):
                out.append(doms)
    return out


def _signature(f: Formula, preds: dict, consts: set):
    if isinstance(f, Atom):
        preds.setdefault(f.pred, len(f.args))
        for t in f.args:
            _term_signature(t, consts)
    elif isinstance(f, (And, Or, Imp)):
        _signature(f.left, preds, consts)
        _signature(f.right, preds, consts)
    elif isinstance(f, (Forall, Exists)):
        _signature(f.body, preds, consts)


def _term_signature(t, consts: set):
    if isinstance(t, Fn):
        if t.args:
            raise SemanticsError("function symbols of arity >= 1 are not enumerated")
        consts.add(t.symbol)


def _quantified(f: Formula) -> bool:
    if isinstance(f, (Forall, Exists)):
        return True
    if isinstance(f, (And, Or, Imp)):
        return _quantified(f.left) or _quantified(f.right)
    return False


def signature(formulas) -> tuple:
    """(predicate -> arity, sorted constants) over some formulas."""
    preds, consts = {}, set()
    for f in formulas:
        _signature(f, preds, consts)
    return dict(sorted(preds.items())), tuple(sorted(consts))


def check_bounds(max_worlds: int, max_domain: int, max_atoms: int):
    if not (1 <= max_worlds <= MAX_WORLDS and 0 <= max_domain <= MAX_DOMAIN and 0 <= max_atoms <= MAX_ATOMS):
        raise BoundsTooLarge(
            f"bounds ({max_worlds}, {max_domain}, {max_atoms}) exceed the cap "
            f"(worlds <= {MAX_WORLDS}, domain <= {MAX_DOMAIN}, atoms <= {MAX_ATOMS})"
        )


def enumerate_models(cls: ModelClass, max_worlds: int, max_domain: int, predicates: dict,
                     constants: tuple = (), worlds: int | None = None):
    """All rooted models of the class within bounds, in a fixed order.

    `predicates` maps each predicate symbol to its arity; only those get
    nonempty extensions.  `worlds` pins the number of worlds.
    """
    cls = ModelClass(cls)
    pool = INDIVIDUALS[:max_domain]
    sizes = [worlds] if worlds else range(1, max_worlds + 1)
    for n in sizes:
        for order in rooted_posets(n, cls.linear):
            up = tuple(sum(1 << v for v in range(n) if (w, v) in order) for w in range(n))
            autos = _automorphisms(n, order)
            upsets = _upsets(n, up)
            for doms in _domain_assignments(n, order, pool, cls.constant_domain):
                stable = [p for p in autos if all(doms[p[w]] == doms[w] for w in range(n))]
                exist = {d: sum(1 << w for w in range(n) if d in doms[w]) for d in pool}
                ground = []
                for pred, arity in predicates.items():
                    for args in itertools.product(pool, repeat=arity):
                        ground.append((pred, args))
                choices = []
                for pred, args in ground:
                    where = (1 << n) - 1
                    for d in args:
                        where &= exist[d]
                    choices.append([u for u in upsets if u & ~where == 0])
                root_dom = sorted(doms[0])
                for const_vals in itertools.product(root_dom, repeat=len(constants)):
                    for masks in itertools.product(*choices):
                        if stable and _dominated(masks, stable, n):
                            continue
                        atoms = [set() for _ in range(n)]
                        for (pred, args), m in zip(ground, masks):
                            for w in range(n):
                                if m >> w & 1:
                                    atoms[w].add((pred, args))
                        yield KripkeModel(n, order, doms, atoms, tuple(zip(constants, const_vals)))


def _permute_mask(m: int, perm: tuple, n: int) -> int:
    return sum(1 << perm[w] for w in range(n) if m >> w & 1)


def _dominated(masks: tuple, autos: list, n: int) -> bool:
    for p in autos:
        if tuple(_permute_mask(m, p, n) for m in masks) < masks:
            return True
    return False


def countermodel_search(f: Formula, cls: ModelClass = ModelClass.ALL_POSETS, max_worlds: int = 3,
                        max_domain: int = 2, max_atoms: int = 3) -> KripkeModel | None:
    """First model in enumeration order (rooted, class-conformant, within bounds)
    that does not force the closed formula `f` at its root, or None."""
    check_bounds(max_worlds, max_domain, max_atoms)
    if free_vars(f):
        raise SemanticsError("countermodel_search needs a closed formula")
    preds, consts = signature([f])
    if max_domain == 0 and (consts or any(preds.values()) or _quantified(f)):
        # domains are empty at bound 0, which only makes sense propositionally
        raise SemanticsError("a first-order formula needs max_domain >= 1")
    if len(preds) > max_atoms:
        raise BoundsTooLarge(f"formula uses {len(preds)} predicate symbols, bound is {max_atoms}")
    for m in enumerate_models(cls, max_worlds, max_domain, preds, consts):
        if not m.forced_worlds(f) & 1:
            return m
    return None


def valid_on_class(f: Formula, cls: ModelClass, max_worlds: int, max_domain: int, max_atoms: int = 3) -> bool:
    return countermodel_search(f, cls, max_worlds, max_domain, max_atoms) is None


def model_class_for(cfg: CalculusConfig) -> tuple:
    """(model class, world cap) the calculus is sound for; cap 1 means classical."""
    rules = cfg.rules
    if cfg.base is Base.CLASSICAL:
        return ModelClass.ALL_POSETS, 1
    linear = bool(rules & {R.com, R.rs, R.ls})
    acd = bool(rules & {R.forallRmm, R.forallRsm, R.unshare}) or (
        linear and bool(rules & {R.forallRms, R.existsLm})
    )
    if linear and acd:
        return ModelClass.LINEAR_CONSTANT_DOMAIN, None
    if linear:
        return ModelClass.LINEAR, None
    if acd:
        return ModelClass.CONSTANT_DOMAIN, None
    return ModelClass.ALL_POSETS, None


# ------------------------------------------------------------- dump format

def dump_model(m: KripkeModel) -> str:
    lines = [f"worlds: {' '.join(map(str, m.worlds))}"]
    strict = sorted((a, b) for a, b in m.order if a != b)
    cover = [(a, b) for a, b in strict
             if not any((a, c) in m.order and (c, b) in m.order for c in m.worlds if c not in (a, b))]
    lines.append("order: " + " ".join(f"{a}<{b}" for a, b in cover))
    for w in m.worlds:
        lines.append(f"domain {w}: {' '.join(sorted(m.domains[w]))}".rstrip())
    for w in m.worlds:
        atoms = sorted(m.atoms[w])
        text = " ".join(p if not args else f"{p}({','.join(args)})" for p, args in atoms)
        lines.append(f"true {w}: {text}".rstrip())
    for name, d in m.constants:
        lines.append(f"constant {name}: {d}")
    return "\n".join(lines) + "\n"


def load_model(text: str) -> KripkeModel:
    n, strict, domains, atoms, consts = 0, set(), {}, {}, {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        head, _, rest = line.partition(":")
        rest = rest.split()
        if head == "worlds":
            n = len(rest)
        elif head == "order":
            for item in rest:
                a, b = item.split("<")
                strict.add((int(a), int(b)))
        elif head.startswith("domain"):
            domains[int(head.split()[1])] = set(rest)
        elif head.startswith("true"):
            w = int(head.split()[1])
            atoms[w] = set()
            for item in rest:
                if "(" in item:
                    p, args = item[:-1].split("(")
                    atoms[w].add((p, tuple(args.split(","))))
                else:
                    atoms[w].add((item, ()))
        elif head.startswith("constant"):
            consts[head.split()[1]] = rest[0]
        else:
            raise ValueError(f"unrecognised model line: {raw!r}")
    return KripkeModel(n, _closure(n, strict), [domains.get(w, set()) for w in range(n)],
                       [atoms.get(w, set()) for w in range(n)], tuple(consts.items()))
