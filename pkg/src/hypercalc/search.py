"""Bounded root-first proof search.

Iterative deepening over *moves*.  A move is one logical or structural
inference chosen by the search, possibly wrapped in bookkeeping steps that
make the kernel rule fit (weakening a succedent down to the single formula
(→-R′) needs, exchanges lining antecedents up for (com) or (rs), the extra
copy for a contraction).  Closing a leaf by weakening down to (Id) or (Bot)
is free.  Every step is produced through `premises_of`, so a returned tree
is a kernel proof by construction.

Rules that are invertible in the active calculus are applied eagerly to the
first principal formula found; other moves are tried in a fixed order.
A branch is cut when its hypersequent, normalized by sorting components
and each side's formulas, repeats on the path to the root.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from .calculus import (
    R, Base, CalculusConfig, RuleError, RuleInstance, premises_of,
)
from .checker import ProofTree
from .syntax import (
    BOT, And, Exists, Forall, Formula, Hypersequent, Imp, Or, alpha_key,
    fresh_var, free_vars, parse_formula, parse_term,
)


@dataclass(frozen=True)
class SearchBudget:
    max_depth: int = 12
    max_width: int = 4
    max_contractions: int = 2
    witnesses: tuple = ()
    cut_pool: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "witnesses", tuple(
            parse_term(t) if isinstance(t, str) else t for t in self.witnesses))
        object.__setattr__(self, "cut_pool", tuple(
            parse_formula(d) if isinstance(d, str) else d for d in self.cut_pool))
        if self.max_depth < 1 or self.max_width < 1 or self.max_contractions < 0:
            raise ValueError("search bounds must be positive")


@dataclass
class SearchOutcome:
    proof: ProofTree | None
    exhausted: bool = False  # no proof exists in the searched space, depth aside
    depth: int = 0
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.proof is not None


def _skey(f: Formula) -> str:
    return repr(alpha_key(f))


def normalize(h: Hypersequent) -> tuple:
    return tuple(sorted((tuple(sorted(map(_skey, s.ante))), tuple(sorted(map(_skey, s.succ)))) for s in h))


class _Chain:
    """Unary steps from a goal upwards, closed by a final instance."""

    def __init__(self, cfg: CalculusConfig, goal: Hypersequent):
        self.cfg, self.cur, self.steps = cfg, goal, []

    def then(self, inst: RuleInstance) -> "_Chain":
        (p,) = premises_of(self.cfg, inst, self.cur)
        self.steps.append((self.cur, inst))
        self.cur = p
        return self

    def reorder(self, comp: int, target: list, left: bool = True) -> "_Chain":
        """Exchange steps until the side's order is `target` (a permutation of positions)."""
        order = list(target)
        rule = R.ieL if left else R.ieR
        # bubble sort; each swap at k exchanges positions k, k+1
        for i in range(len(order)):
            for k in range(len(order) - 1 - i):
                if order[k] > order[k + 1]:
                    order[k], order[k + 1] = order[k + 1], order[k]
                    self.then(RuleInstance(rule, comp=comp, pos=k))
        return self

    def weaken(self, comp: int, drop: list, left: bool = True) -> "_Chain":
        for i in sorted(drop, reverse=True):
            self.then(RuleInstance(R.iwL if left else R.iwR, comp=comp, pos=i))
        return self

    def finish(self, inst: RuleInstance):
        premises = premises_of(self.cfg, inst, self.cur)
        top, steps = self.cur, list(self.steps)

        def build(subs) -> ProofTree:
            t = ProofTree(top, inst, tuple(subs))
            for concl, i in reversed(steps):
                t = ProofTree(concl, i, (t,))
            return t

        return premises, build


@dataclass
class _Move:
    premises: list
    build: object
    cost: int = 0


def _target_order(n: int, first: list) -> list:
    """Positions so that `first` come first, both parts in their original order."""
    rest = [i for i in range(n) if i not in first]
    return list(first) + rest


class _Search:
    def __init__(self, cfg: CalculusConfig, budget: SearchBudget):
        self.cfg, self.b = cfg, budget
        self.rules = cfg.rules
        self.classical = cfg.base is Base.CLASSICAL
        self.single = cfg.single_conclusion
        self.nodes = 0
        self.cutoff = False
        self.loops = 0
        self.failed = set()

    # ------------------------------------------------------------ helpers
    def _chain(self, h):
        return _Chain(self.cfg, h)

    def _try(self, make) -> _Move | None:
        try:
            return make()
        except RuleError:
            return None

    def _isolate(self, h: Hypersequent, c: int) -> _Chain:
        """Chain dropping every component but c with (ew); c ends up at 0."""
        ch = self._chain(h)
        for k in range(len(h) - 1, c, -1):
            ch.then(RuleInstance(R.ew, comp=k))
        for _ in range(c):
            ch.then(RuleInstance(R.ew, comp=0))
        return ch

    def _eigen(self, h: Hypersequent, bound) -> object:
        avoid = set(free_vars(h))
        for t in self.b.witnesses:
            avoid |= free_vars(t) - {bound}
        return fresh_var(bound, avoid)

    # ------------------------------------------------------------ closure
    def closure(self, h: Hypersequent) -> ProofTree | None:
        for c, s in enumerate(h):
            keys = [alpha_key(f) for f in s.succ]
            for i, f in enumerate(s.ante):
                if f == BOT and s.succ and R.Bot in self.rules:
                    j, rule = len(s.succ) - 1, R.Bot
                elif alpha_key(f) in keys and R.Id in self.rules:
                    j, rule = keys.index(alpha_key(f)), R.Id
                else:
                    continue
                try:
                    ch = self._isolate(h, c)
                    ch.weaken(0, [k for k in range(len(s.ante)) if k != i])
                    ch.weaken(0, [k for k in range(len(s.succ)) if k != j], left=False)
                    _, build = ch.finish(RuleInstance(rule))
                    return build([])
                except RuleError:
                    continue
        return None

    # -------------------------------------------------------------- moves
    def invertible(self, h: Hypersequent):
        rules = self.rules
        for c, s in enumerate(h):
            for i, f in enumerate(s.ante):
                if isinstance(f, And) and {R.icL, R.andL1, R.andL2} <= rules:
                    m = self._try(lambda: _Move(*self._chain(h)
                                               .then(RuleInstance(R.icL, comp=c, pos=i))
                                               .then(RuleInstance(R.andL1, comp=c, pos=i))
                                               .finish(RuleInstance(R.andL2, comp=c, pos=i + 1))))
                elif isinstance(f, Or) and R.orL in rules:
                    m = self._try(lambda: _Move(*self._chain(h).finish(RuleInstance(R.orL, comp=c, pos=i))))
                elif isinstance(f, Exists):
                    m = self._exists_left(h, c, i, f)
                elif isinstance(f, Imp) and self.classical and R.impL in rules:
                    m = self._try(lambda: _Move(*self._chain(h).finish(RuleInstance(R.impL, comp=c, pos=i))))
                else:
                    m = None
                if m:
                    return m
            for i, f in enumerate(s.succ):
                m = None
                if isinstance(f, And) and R.andR in rules:
                    m = self._try(lambda: _Move(*self._chain(h).finish(RuleInstance(R.andR, comp=c, pos=i))))
                elif isinstance(f, Or) and not self.single and {R.icR, R.orR1, R.orR2} <= rules:
                    m = self._try(lambda: _Move(*self._chain(h)
                                               .then(RuleInstance(R.icR, comp=c, pos=i))
                                               .then(RuleInstance(R.orR1, comp=c, pos=i))
                                               .finish(RuleInstance(R.orR2, comp=c, pos=i + 1))))
                elif isinstance(f, Imp):
                    if R.impR in rules:
                        m = self._try(lambda: _Move(*self._chain(h).finish(RuleInstance(R.impR, comp=c, pos=i))))
                    elif len(s.succ) == 1 and R.impRprime in rules:
                        m = self._try(lambda: _Move(*self._chain(h).finish(RuleInstance(R.impRprime, comp=c))))
                elif isinstance(f, Forall):
                    m = self._forall_right(h, c, i, f, weaken=False)
                if m:
                    return m
        return None

    def _exists_left(self, h, c, i, f):
        y = self._eigen(h, f.var)
        for r in (R.existsLm, R.existsLs):
            if r in self.rules:
                m = self._try(lambda: _Move(*self._chain(h).finish(RuleInstance(r, comp=c, pos=i, eigenvariable=y))))
                if m:
                    return m
        return None

    def _forall_right(self, h, c, i, f, weaken):
        y = self._eigen(h, f.var)
        s = h[c]
        others = [k for k in range(len(s.succ)) if k != i]
        if not weaken:
            for r in (R.forallRmm, R.forallRsm):
                if r in self.rules:
                    m = self._try(lambda: _Move(*self._chain(h).finish(
                        RuleInstance(r, comp=c, pos=i, eigenvariable=y))))
                    if m:
                        return m
            if others:
                return None
        for r in (R.forallRms, R.forallRss):
            if r in self.rules:
                m = self._try(lambda: _Move(*self._chain(h).weaken(c, others, left=False)
                                            .finish(RuleInstance(r, comp=c, eigenvariable=y))))
                if m:
                    return m
        return None

    def moves(self, h: Hypersequent):
        rules, b = self.rules, self.b
        n = len(h)
        for c, s in enumerate(h):
            for i, f in enumerate(s.succ):
                if isinstance(f, Or) and self.single:
                    for r in (R.orR1, R.orR2):
                        if r in rules:
                            yield lambda r=r, c=c, i=i: _Move(*self._chain(h).finish(RuleInstance(r, comp=c, pos=i)))
                if isinstance(f, Imp) and len(s.succ) > 1 and R.impRprime in rules and R.impR not in rules:
                    others = [k for k in range(len(s.succ)) if k != i]
                    yield lambda c=c, others=others: _Move(*self._chain(h).weaken(c, others, left=False)
                                                           .finish(RuleInstance(R.impRprime, comp=c)))
                if isinstance(f, Forall) and len(s.succ) > 1:
                    yield lambda c=c, i=i, f=f: self._forall_right(h, c, i, f, weaken=True)
                if isinstance(f, Exists) and R.existsR in rules:
                    for t in b.witnesses:
                        yield lambda c=c, i=i, t=t: _Move(*self._chain(h).finish(
                            RuleInstance(R.existsR, comp=c, pos=i, witness=t)))
                        if not self.single and R.icR in rules:
                            yield lambda c=c, i=i, t=t: _Move(*self._chain(h).then(RuleInstance(R.icR, comp=c, pos=i))
                                                              .finish(RuleInstance(R.existsR, comp=c, pos=i, witness=t)), cost=1)
        for c, s in enumerate(h):
            for i, f in enumerate(s.ante):
                if isinstance(f, Forall) and R.forallL in rules:
                    for t in b.witnesses:
                        yield lambda c=c, i=i, t=t: _Move(*self._chain(h).finish(
                            RuleInstance(R.forallL, comp=c, pos=i, witness=t)))
                        yield lambda c=c, i=i, t=t: _Move(*self._chain(h).then(RuleInstance(R.icL, comp=c, pos=i))
                                                          .finish(RuleInstance(R.forallL, comp=c, pos=i, witness=t)), cost=1)
                if isinstance(f, Imp) and not self.classical and R.impL in rules:
                    yield lambda c=c, i=i: _Move(*self._chain(h).finish(RuleInstance(R.impL, comp=c, pos=i)))
                    yield lambda c=c, i=i: _Move(*self._chain(h).then(RuleInstance(R.icL, comp=c, pos=i))
                                                 .finish(RuleInstance(R.impL, comp=c, pos=i)), cost=1)
        if R.ec in rules and n < b.max_width:
            for c in range(n):
                yield lambda c=c: _Move(*self._chain(h).finish(RuleInstance(R.ec, comp=c)), cost=1)
        for c, j in itertools.combinations(range(n), 2):
            if R.com in rules:
                yield from self._com_moves(h, c, j)
            if R.rs in rules:
                yield lambda c=c, j=j: self._split_move(h, c, j, R.rs)
            if R.ls in rules:
                yield lambda c=c, j=j: self._split_move(h, c, j, R.ls)
        if R.cut in rules:
            for d in b.cut_pool:
                for c, s in enumerate(h):
                    for k in range(len(s.ante) + 1):
                        for m in range(len(s.succ) + 1):
                            yield lambda c=c, k=k, m=m, d=d: _Move(*self._chain(h).finish(
                                RuleInstance(R.cut, comp=c, split=k, split2=m, cut_formula=d)))

    def _com_moves(self, h, c, j):
        a, b = h[c].ante, h[j].ante
        seen = set()
        for ka in range(len(a) + 1):
            for keep_a in itertools.combinations(range(len(a)), ka):
                for kb in range(len(b) + 1):
                    for keep_b in itertools.combinations(range(len(b)), kb):
                        if ka == len(a) and kb == len(b):
                            continue
                        sig = (tuple(sorted(_skey(a[i]) for i in keep_a)), tuple(sorted(_skey(b[i]) for i in keep_b)))
                        if sig in seen:
                            continue
                        seen.add(sig)

                        def make(keep_a=keep_a, keep_b=keep_b):
                            ch = self._chain(h)
                            ch.reorder(c, _target_order(len(a), list(keep_a)))
                            ch.reorder(j, _target_order(len(b), list(keep_b)))
                            return _Move(*ch.finish(RuleInstance(R.com, comp=c, comp2=j,
                                                                 split=len(keep_a), split2=len(keep_b))))
                        yield make

    def _split_move(self, h, c, j, rule):
        left = rule is R.rs  # rs matches antecedents, ls succedents
        sa = h[c].ante if left else h[c].succ
        sb = h[j].ante if left else h[j].succ
        common = Counter(map(_skey, sa)) & Counter(map(_skey, sb))

        def keep(side):
            budget, kept = Counter(common), []
            for i, f in enumerate(side):
                k = _skey(f)
                if budget[k]:
                    budget[k] -= 1
                    kept.append(i)
            return kept

        ka, kb = keep(sa), keep(sb)
        ch = self._chain(h)
        ch.weaken(c, [i for i in range(len(sa)) if i not in ka], left=left)
        ch.weaken(j, [i for i in range(len(sb)) if i not in kb], left=left)
        # line component j up with component c
        ca = [_skey(f) for f in (ch.cur[c].ante if left else ch.cur[c].succ)]
        cb = [_skey(f) for f in (ch.cur[j].ante if left else ch.cur[j].succ)]
        used, target = set(), []
        for k in ca:
            p = next(p for p, x in enumerate(cb) if x == k and p not in used)
            used.add(p)
            target.append(p)
        ch.reorder(j, target, left=left)
        return _Move(*ch.finish(RuleInstance(rule, comp=c, comp2=j)))

    # ---------------------------------------------------------------- DFS
    def solve(self, h: Hypersequent, depth: int, contr: int, path: frozenset) -> ProofTree | None:
        self.nodes += 1
        leaf = self.closure(h)
        if leaf is not None:
            return leaf
        if depth == 0:
            self.cutoff = True
            return None
        key = normalize(h)
        if key in path:
            self.loops += 1
            return None
        ck = (key, depth, contr)
        if ck in self.failed:
            return None
        loops_before = self.loops
        path = path | {key}
        inv = self.invertible(h)
        if inv is not None:
            found = self._run([lambda: inv], depth, contr, path)
            if found is not None or self.loops == loops_before or not self.b.cut_pool:
                if found is None:
                    self.failed.add(ck)
                return found
            # the invertible step only failed by revisiting an ancestor; with
            # cuts in play that says nothing, so fall back to the full move set
        found = self._run(self.moves(h), depth, contr, path)
        if found is None and self.loops == loops_before:
            self.failed.add(ck)
        return found

    def _run(self, candidates, depth, contr, path):
        for make in candidates:
            m = self._try(make)
            if m is None or m.cost > contr:
                continue
            if any(len(p) > self.b.max_width for p in m.premises):
                continue
            subs = []
            for p in m.premises:
                t = self.solve(p, depth - 1, contr - m.cost, path)
                if t is None:
                    break
                subs.append(t)
            else:
                return m.build(subs)
        return None


def search(cfg: CalculusConfig, goal: Hypersequent, budget: SearchBudget | None = None) -> SearchOutcome:
    """Iterative deepening up to budget.max_depth; stops early when a round
    finishes without ever reaching the depth bound (the space is exhausted)."""
    budget = budget or SearchBudget()
    s = _Search(cfg, budget)
    for d in range(1, budget.max_depth + 1):
        s.cutoff = False
        s.failed = set()
        proof = s.solve(goal, d, budget.max_contractions, frozenset())
        if proof is not None:
            return SearchOutcome(proof, False, d, s.nodes)
        if not s.cutoff:
            return SearchOutcome(None, True, d, s.nodes)
    return SearchOutcome(None, False, budget.max_depth, s.nodes)


def prove(cfg: CalculusConfig, goal: Hypersequent, budget: SearchBudget | None = None) -> ProofTree | None:
    return search(cfg, goal, budget).proof
