"""Inference rules of the hypersequent calculi and calculus configurations.

Every rule acts on one *active* component of the conclusion, selected by
``comp``; the remaining components form the context ``G`` and keep their
positions in each premise.  With ``comp=0`` and default positions each rule
is read exactly as its displayed schema (active component first, principal
formula leftmost in the antecedent / rightmost in the succedent).
"""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from enum import Enum

from .syntax import (
    BOT, GLOBAL, LOCAL, And, Exists, Forall, Formula, Hypersequent, Imp, Or,
    Sequent, Term, Var, alpha_equal, free_vars, has_global,
    sequent_alpha_equal, substitute, substitute_sequent,
)


class RuleId(str, Enum):
    Id = "Id"
    Bot = "Bot"
    ew = "ew"
    ec = "ec"
    ee = "ee"
    iwL = "iwL"
    iwR = "iwR"
    icL = "icL"
    icR = "icR"
    ieL = "ieL"
    ieR = "ieR"
    cut = "cut"
    andL1 = "andL1"
    andL2 = "andL2"
    andR = "andR"
    orL = "orL"
    orR1 = "orR1"
    orR2 = "orR2"
    impL = "impL"
    impR = "impR"
    impRprime = "impRprime"
    forallL = "forallL"
    forallRss = "forallRss"
    forallRms = "forallRms"
    forallRmm = "forallRmm"
    forallRsm = "forallRsm"
    existsLs = "existsLs"
    existsLm = "existsLm"
    existsR = "existsR"
    com = "com"
    rs = "rs"
    ls = "ls"
    share = "share"
    unshare = "unshare"

    def __str__(self) -> str:
        return self.value


R = RuleId

AXIOMS = frozenset({R.Id, R.Bot})
EXTERNAL = frozenset({R.ew, R.ec, R.ee})
INTERNAL = frozenset({R.iwL, R.iwR, R.icL, R.icR, R.ieL, R.ieR})
SPLITTING = frozenset({R.com, R.rs, R.ls})
SHARING = frozenset({R.share, R.unshare})
BINARY_RULES = frozenset({R.cut, R.andR, R.orL, R.impL})
EIGEN_RULES = frozenset({R.forallRss, R.forallRms, R.forallRmm, R.forallRsm, R.existsLs, R.existsLm})
SINGLE_COMPONENT_RULES = frozenset({R.Id, R.Bot, R.forallRss, R.forallRsm, R.existsLs})

LABELS = {
    R.Id: "Id", R.Bot: "Bot", R.ew: "ew", R.ec: "ec", R.ee: "ee",
    R.iwL: "iw-L", R.iwR: "iw-R", R.icL: "ic-L", R.icR: "ic-R", R.ieL: "ie-L", R.ieR: "ie-R",
    R.cut: "cut", R.andL1: "∧1-L", R.andL2: "∧2-L", R.andR: "∧-R", R.orL: "∨-L",
    R.orR1: "∨1-R", R.orR2: "∨2-R", R.impL: "→-L", R.impR: "→-R", R.impRprime: "→-R′",
    R.forallL: "∀-L", R.forallRss: "∀-R_ss", R.forallRms: "∀-R_ms", R.forallRmm: "∀-R_mm",
    R.forallRsm: "∀-R_sm", R.existsLs: "∃-L_s", R.existsLm: "∃-L_m", R.existsR: "∃-R",
    R.com: "com", R.rs: "rs", R.ls: "ls", R.share: "share", R.unshare: "unshare",
}


# ------------------------------------------------------------------ errors

class RuleError(Exception):
    kind = "RuleError"

    def __init__(self, message: str, component: int | None = None, position: int | None = None):
        super().__init__(message)
        self.component = component
        self.position = position


class RuleDisabled(RuleError):
    kind = "RuleDisabled"


class ShapeMismatch(RuleError):
    kind = "ShapeMismatch"


class EigenvariableViolation(RuleError):
    kind = "EigenvariableViolation"


class DisciplineViolation(RuleError):
    kind = "DisciplineViolation"


class WidthExceeded(RuleError):
    kind = "WidthExceeded"


# ---------------------------------------------------------- configurations

class Base(str, Enum):
    CLASSICAL = "classical"
    SINGLE_CONCLUSION = "lj"
    RESTRICTED_IMP = "ljprime"


_PROP_CORE = frozenset({
    R.Id, R.Bot, R.ew, R.ec, R.ee, R.iwL, R.iwR, R.icL, R.icR, R.ieL, R.ieR, R.cut,
    R.andL1, R.andL2, R.andR, R.orL, R.orR1, R.orR2, R.impL,
})
_BASE_RULES = {
    Base.CLASSICAL: _PROP_CORE | {R.impR},
    Base.SINGLE_CONCLUSION: (_PROP_CORE - {R.icR, R.ieR}) | {R.impRprime},
    Base.RESTRICTED_IMP: _PROP_CORE | {R.impRprime},
}
_QUANT_CORE = frozenset({R.forallL, R.forallRss, R.existsLs, R.existsR})
_SINGLE_FORBIDDEN = frozenset({R.impR, R.rs, R.icR, R.ieR})


@dataclass(frozen=True)
class CalculusConfig:
    base: Base
    optional_rules: frozenset = frozenset()
    quantifiers_enabled: bool = False
    width_cap: int | None = None
    disabled_rules: frozenset = frozenset()
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "base", Base(self.base))
        object.__setattr__(self, "optional_rules", frozenset(RuleId(r) for r in self.optional_rules))
        object.__setattr__(self, "disabled_rules", frozenset(RuleId(r) for r in self.disabled_rules))
        if self.base is Base.SINGLE_CONCLUSION and self.optional_rules & _SINGLE_FORBIDDEN:
            bad = sorted(map(str, self.optional_rules & _SINGLE_FORBIDDEN))
            raise ValueError(f"single-conclusion base forbids {', '.join(bad)}")
        if self.optional_rules & SHARING and not self.quantifiers_enabled:
            raise ValueError("share/unshare require quantifiers")
        if self.width_cap is not None and self.width_cap < 1:
            raise ValueError("width cap must be positive")

    @property
    def rules(self) -> frozenset:
        rules = _BASE_RULES[self.base]
        if self.quantifiers_enabled:
            rules = rules | _QUANT_CORE
        return (rules | self.optional_rules) - self.disabled_rules

    @property
    def single_conclusion(self) -> bool:
        return self.base is Base.SINGLE_CONCLUSION

    @property
    def globals_allowed(self) -> bool:
        return bool(self.rules & SHARING)

    def with_rules(self, enable=(), disable=()) -> "CalculusConfig":
        enable = frozenset(RuleId(r) for r in enable)
        disable = frozenset(RuleId(r) for r in disable)
        return dataclasses.replace(
            self,
            optional_rules=(self.optional_rules | enable) - disable,
            disabled_rules=(self.disabled_rules | disable) - enable,
            name=None,
        )

    def label(self) -> str:
        if self.name:
            return self.name
        extra = "+".join(sorted(map(str, self.optional_rules)))
        return f"{self.base.value}{'+Q' if self.quantifiers_enabled else ''}{'+' + extra if extra else ''}"


def _preset(name, base, optional=(), quantifiers=False, width_cap=None):
    return CalculusConfig(base, frozenset(optional), quantifiers, width_cap, name=name)


_SC, _RI = Base.SINGLE_CONCLUSION, Base.RESTRICTED_IMP
PRESETS = {
    "HLK": _preset("HLK", Base.CLASSICAL),
    "HLJ": _preset("HLJ", _SC),
    "HLJ'": _preset("HLJ'", _RI),
    "QHLJ": _preset("QHLJ", _SC, quantifiers=True),
    "QHLJ'": _preset("QHLJ'", _RI, quantifiers=True),
    "GD-com": _preset("GD-com", _SC, {R.com}),
    "GD-rs": _preset("GD-rs", _RI, {R.rs}),
    "GD-ls": _preset("GD-ls", _RI, {R.ls}),
    "QGD-com": _preset("QGD-com", _SC, {R.forallRms, R.com}, True),
    "QGD-rs": _preset("QGD-rs", _RI, {R.forallRms, R.rs}, True),
    "LIN-pred": _preset("LIN-pred", _SC, {R.com}, True),
    "CD-free": _preset("CD-free", _RI, {R.forallRms, R.existsLm}, True),
    "LJ'": _preset("LJ'", _RI, quantifiers=True, width_cap=1),
}


def preset(name: str) -> CalculusConfig:
    """Look up a preset; ``∀`` may stand for ``Q`` and ``′`` for ``'``."""
    key = name.strip().replace("∀", "Q").replace("′", "'")
    if key in PRESETS:
        return PRESETS[key]
    for k, v in PRESETS.items():
        if k.lower() == key.lower():
            return v
    raise KeyError(f"unknown preset {name!r}; known: {', '.join(PRESETS)}")


# ---------------------------------------------------------- rule instances

@dataclass(frozen=True)
class RuleInstance:
    rule: RuleId
    comp: int = 0
    comp2: int | None = None
    pos: int | None = None
    split: int | None = None
    split2: int | None = None
    cut_formula: Formula | None = None
    witness: Term | None = None
    eigenvariable: Var | None = None
    variable: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "rule", RuleId(self.rule))

    def params(self) -> dict:
        """Non-default parameters, by field name."""
        out = {}
        for f in dataclasses.fields(self):
            if f.name == "rule":
                continue
            v = getattr(self, f.name)
            if v is not None and not (f.name == "comp" and v == 0):
                out[f.name] = v
        return out


_P_POS = {"comp", "pos"}
ALLOWED_PARAMS = {
    R.Id: set(), R.Bot: set(),
    R.ew: {"comp"}, R.ec: {"comp"}, R.ee: {"comp"},
    R.cut: {"comp", "split", "split2", "cut_formula"},
    R.impRprime: {"comp"},
    R.forallL: _P_POS | {"witness"}, R.existsR: _P_POS | {"witness"},
    R.forallRss: {"comp", "eigenvariable"}, R.forallRms: {"comp", "eigenvariable"},
    R.forallRmm: _P_POS | {"eigenvariable"}, R.forallRsm: _P_POS | {"eigenvariable"},
    R.existsLs: _P_POS | {"eigenvariable"}, R.existsLm: _P_POS | {"eigenvariable"},
    R.com: {"comp", "comp2", "split", "split2"},
    R.rs: {"comp", "comp2"}, R.ls: {"comp", "comp2"},
    R.share: {"comp", "variable"}, R.unshare: {"comp", "variable"},
}
for _r in (R.iwL, R.iwR, R.icL, R.icR, R.ieL, R.ieR, R.andL1, R.andL2, R.andR,
           R.orL, R.orR1, R.orR2, R.impL, R.impR):
    ALLOWED_PARAMS[_r] = set(_P_POS)
REQUIRED_PARAMS = {
    R.cut: {"cut_formula"}, R.forallL: {"witness"}, R.existsR: {"witness"},
    R.com: {"comp2"}, R.rs: {"comp2"}, R.ls: {"comp2"},
    R.share: {"variable"}, R.unshare: {"variable"},
}


def _check_params(inst: RuleInstance):
    present = set(inst.params())
    extra = present - ALLOWED_PARAMS[inst.rule]
    if extra:
        raise ShapeMismatch(f"{inst.rule}: unexpected parameter(s) {', '.join(sorted(extra))}")
    missing = REQUIRED_PARAMS.get(inst.rule, set()) - present
    if missing:
        raise ShapeMismatch(f"{inst.rule}: missing parameter(s) {', '.join(sorted(missing))}")


# ---------------------------------------------------------------- helpers

def _component(h: Hypersequent, i: int) -> Sequent:
    if not 0 <= i < len(h):
        raise ShapeMismatch(f"no component {i} (width {len(h)})", component=i)
    return h[i]


def _replace(h: Hypersequent, i: int, s: Sequent) -> Hypersequent:
    comps = list(h.components)
    comps[i] = s
    return Hypersequent(comps)


def _index(side: tuple, pos: int | None, default: int, comp: int, what: str) -> int:
    i = default if pos is None else pos
    if not side or not 0 <= i < len(side):
        raise ShapeMismatch(f"no {what} formula at position {i}", component=comp, position=i)
    return i


def _expect(f: Formula, cls, comp: int, pos: int):
    if not isinstance(f, cls):
        raise ShapeMismatch(f"expected {cls.__name__} principal formula, found {f}", component=comp, position=pos)


def _set(side: tuple, i: int, *fs) -> tuple:
    return side[:i] + tuple(fs) + side[i + 1:]


def _drop(side: tuple, i: int) -> tuple:
    return side[:i] + side[i + 1:]


def _single_component(h: Hypersequent, rule: RuleId):
    if len(h) != 1:
        raise ShapeMismatch(f"{rule} applies to single-component hypersequents only", component=0)


def _eigen(inst: RuleInstance, bound: Var) -> Var:
    y = inst.eigenvariable or bound
    if y.scope != LOCAL:
        raise EigenvariableViolation(f"eigenvariable {y} must be local", component=inst.comp)
    return y


def _require_absent(y: Var, context, where: str, comp: int):
    if y in free_vars(context):
        raise EigenvariableViolation(f"eigenvariable {y} occurs free in {where}", component=comp)


def discipline_check(cfg: CalculusConfig, h: Hypersequent, where: str = "conclusion"):
    if cfg.width_cap is not None and len(h) > cfg.width_cap:
        raise WidthExceeded(f"{where} has {len(h)} components, cap is {cfg.width_cap}")
    if cfg.single_conclusion:
        for i, s in enumerate(h):
            if len(s.succ) > 1:
                raise DisciplineViolation(f"{where} component {i} has {len(s.succ)} conclusions", component=i)
    if not cfg.globals_allowed and has_global(h):
        raise DisciplineViolation(f"global variable in {where} without share/unshare")


# ------------------------------------------------------------ rule schemas

def _premises(cfg: CalculusConfig, inst: RuleInstance, h: Hypersequent) -> list:
    r, c = inst.rule, inst.comp
    if r in SINGLE_COMPONENT_RULES:
        _single_component(h, r)
    s = _component(h, c)
    ante, succ = s.ante, s.succ

    if r is R.Id:
        if len(ante) != 1 or len(succ) != 1 or not alpha_equal(ante[0], succ[0]):
            raise ShapeMismatch("(Id) needs the shape A |- A", component=c)
        return []
    if r is R.Bot:
        if len(ante) != 1 or ante[0] != BOT or len(succ) != 1:
            raise ShapeMismatch("(Bot) needs the shape bot |- A", component=c)
        return []

    # external structural
    if r is R.ew:
        if len(h) < 2:
            raise ShapeMismatch("(ew) needs at least two components", component=c)
        return [Hypersequent(h.components[:c] + h.components[c + 1:])]
    if r is R.ec:
        return [Hypersequent(h.components[:c + 1] + (s,) + h.components[c + 1:])]
    if r is R.ee:
        if c + 1 >= len(h):
            raise ShapeMismatch("(ee) needs a component to the right", component=c)
        comps = list(h.components)
        comps[c], comps[c + 1] = comps[c + 1], comps[c]
        return [Hypersequent(comps)]

    # internal structural
    if r is R.iwL:
        i = _index(ante, inst.pos, 0, c, "antecedent")
        return [_replace(h, c, Sequent(_drop(ante, i), succ))]
    if r is R.iwR:
        i = _index(succ, inst.pos, len(succ) - 1, c, "succedent")
        return [_replace(h, c, Sequent(ante, _drop(succ, i)))]
    if r is R.icL:
        i = _index(ante, inst.pos, 0, c, "antecedent")
        return [_replace(h, c, Sequent(_set(ante, i, ante[i], ante[i]), succ))]
    if r is R.icR:
        i = _index(succ, inst.pos, len(succ) - 1, c, "succedent")
        return [_replace(h, c, Sequent(ante, _set(succ, i, succ[i], succ[i])))]
    if r is R.ieL:
        i = _index(ante[:-1], inst.pos, 0, c, "antecedent pair")
        return [_replace(h, c, Sequent(ante[:i] + (ante[i + 1], ante[i]) + ante[i + 2:], succ))]
    if r is R.ieR:
        i = _index(succ[:-1], inst.pos, len(succ) - 2, c, "succedent pair")
        return [_replace(h, c, Sequent(ante, succ[:i] + (succ[i + 1], succ[i]) + succ[i + 2:]))]

    if r is R.cut:
        k = len(ante) if inst.split is None else inst.split
        m = 0 if inst.split2 is None else inst.split2
        if not (0 <= k <= len(ante) and 0 <= m <= len(succ)):
            raise ShapeMismatch("cut split points out of range", component=c)
        d = inst.cut_formula
        return [
            _replace(h, c, Sequent(ante[:k], succ[:m] + (d,))),
            _replace(h, c, Sequent((d,) + ante[k:], succ[m:])),
        ]

    # logical, left
    if r in (R.andL1, R.andL2, R.orL, R.impL, R.forallL, R.existsLs, R.existsLm):
        i = _index(ante, inst.pos, 0, c, "antecedent")
        f = ante[i]
        if r in (R.andL1, R.andL2):
            _expect(f, And, c, i)
            part = f.left if r is R.andL1 else f.right
            return [_replace(h, c, Sequent(_set(ante, i, part), succ))]
        if r is R.orL:
            _expect(f, Or, c, i)
            return [_replace(h, c, Sequent(_set(ante, i, f.left), succ)),
                    _replace(h, c, Sequent(_set(ante, i, f.right), succ))]
        if r is R.impL:
            _expect(f, Imp, c, i)
            rest = _drop(ante, i)
            # single-conclusion: Gentzen's LJ form, side succedent dropped from the left premise
            first = (f.left,) if cfg.single_conclusion else succ + (f.left,)
            return [_replace(h, c, Sequent(rest, first)),
                    _replace(h, c, Sequent(_set(ante, i, f.right), succ))]
        if r is R.forallL:
            _expect(f, Forall, c, i)
            return [_replace(h, c, Sequent(_set(ante, i, substitute(f.body, f.var, inst.witness)), succ))]
        _expect(f, Exists, c, i)
        y = _eigen(inst, f.var)
        if r is R.existsLs:
            _require_absent(y, s, "the lower sequent", c)
        else:
            _require_absent(y, h, "the lower hypersequent", c)
        return [_replace(h, c, Sequent(_set(ante, i, substitute(f.body, f.var, y)), succ))]

    # logical, right
    if r in (R.impRprime, R.forallRss, R.forallRms):
        if len(succ) != 1:
            raise ShapeMismatch(f"({LABELS[r]}) needs exactly one succedent formula", component=c)
        f = succ[0]
        if r is R.impRprime:
            _expect(f, Imp, c, 0)
            return [_replace(h, c, Sequent((f.left,) + ante, (f.right,)))]
        _expect(f, Forall, c, 0)
        y = _eigen(inst, f.var)
        if r is R.forallRss:
            _require_absent(y, s, "the lower sequent", c)
        else:
            _require_absent(y, h, "the lower hypersequent", c)
        return [_replace(h, c, Sequent(ante, (substitute(f.body, f.var, y),)))]

    if r in (R.andR, R.orR1, R.orR2, R.impR, R.existsR, R.forallRmm, R.forallRsm):
        i = _index(succ, inst.pos, len(succ) - 1, c, "succedent")
        f = succ[i]
        if r is R.andR:
            _expect(f, And, c, i)
            return [_replace(h, c, Sequent(ante, _set(succ, i, f.left))),
                    _replace(h, c, Sequent(ante, _set(succ, i, f.right)))]
        if r in (R.orR1, R.orR2):
            _expect(f, Or, c, i)
            return [_replace(h, c, Sequent(ante, _set(succ, i, f.left if r is R.orR1 else f.right)))]
        if r is R.impR:
            _expect(f, Imp, c, i)
            return [_replace(h, c, Sequent((f.left,) + ante, _set(succ, i, f.right)))]
        if r is R.existsR:
            _expect(f, Exists, c, i)
            return [_replace(h, c, Sequent(ante, _set(succ, i, substitute(f.body, f.var, inst.witness))))]
        _expect(f, Forall, c, i)
        y = _eigen(inst, f.var)
        if r is R.forallRsm:
            _require_absent(y, s, "the lower sequent", c)
        else:
            _require_absent(y, h, "the lower hypersequent", c)
        return [_replace(h, c, Sequent(ante, _set(succ, i, substitute(f.body, f.var, y))))]

    # two-component structural rules
    if r in SPLITTING:
        j = inst.comp2
        t = _component(h, j)
        if j == c:
            raise ShapeMismatch(f"({r}) needs two distinct components", component=c)

        def build(keep: int, drop: int, seq: Sequent) -> Hypersequent:
            comps = list(h.components)
            comps[keep] = seq
            del comps[drop]
            return Hypersequent(comps)

        if r is R.com:
            k = 0 if inst.split is None else inst.split
            m = 0 if inst.split2 is None else inst.split2
            if not (0 <= k <= len(ante) and 0 <= m <= len(t.ante)):
                raise ShapeMismatch("(com) split points out of range", component=c)
            gamma, delta_p = ante[:k], ante[k:]
            gamma_p, delta = t.ante[:m], t.ante[m:]
            return [build(c, j, Sequent(gamma + delta, succ)),
                    build(j, c, Sequent(gamma_p + delta_p, t.succ))]
        if r is R.rs:
            if not (len(ante) == len(t.ante) and all(map(alpha_equal, ante, t.ante))):
                raise ShapeMismatch("(rs) needs identical antecedents", component=j)
            return [build(c, j, Sequent(ante, succ + t.succ))]
        if not (len(succ) == len(t.succ) and all(map(alpha_equal, succ, t.succ))):
            raise ShapeMismatch("(ls) needs identical succedents", component=j)
        return [build(c, j, Sequent(ante + t.ante, succ))]

    if r in SHARING:
        name = inst.variable
        g, l = Var(name, GLOBAL), Var(name, LOCAL)
        others = Hypersequent(h.components[:c] + h.components[c + 1:]) if len(h) > 1 else None
        if r is R.share:
            # conclusion component is [x!/x]S
            if l in free_vars(s):
                raise ShapeMismatch(f"(share) conclusion still has local {l} free", component=c)
            prem = substitute_sequent(s, g, l)
            if g in free_vars(prem) or (others is not None and g in free_vars(others)):
                raise EigenvariableViolation(f"global {g} occurs free in S, G", component=c)
        else:
            # conclusion component is [x/x!]S
            if g in free_vars(s):
                raise ShapeMismatch(f"(unshare) conclusion still has global {g} free", component=c)
            prem = substitute_sequent(s, l, g)
            if others is not None and g in free_vars(others):
                raise EigenvariableViolation(f"global {g} occurs free in G", component=c)
            if l in free_vars(prem):
                raise EigenvariableViolation(f"local {l} occurs free in S", component=c)
        back = substitute_sequent(prem, l, g) if r is R.share else substitute_sequent(prem, g, l)
        if not sequent_alpha_equal(back, s):
            raise ShapeMismatch(f"({r}) conclusion is not a substitution instance", component=c)
        return [_replace(h, c, prem)]

    raise ShapeMismatch(f"unknown rule {r}")


def premises_of(cfg: CalculusConfig, inst: RuleInstance, conclusion: Hypersequent) -> list:
    """Premises demanded by `inst` for `conclusion`, after all side conditions.

    Raises a RuleError subclass when the instance does not apply.
    """
    if inst.rule not in cfg.rules:
        raise RuleDisabled(f"rule ({LABELS[inst.rule]}) is not enabled in {cfg.label()}", component=inst.comp)
    _check_params(inst)
    discipline_check(cfg, conclusion)
    premises = _premises(cfg, inst, conclusion)
    for k, p in enumerate(premises):
        discipline_check(cfg, p, where=f"premise {k}")
    return premises


# -------------------------------------------------------------- enumeration

def _candidates(cfg: CalculusConfig, goal: Hypersequent, witnesses, cut_pool):
    n = len(goal)
    for r in sorted(cfg.rules, key=lambda x: list(RuleId).index(x)):
        if r in AXIOMS:
            yield RuleInstance(r)
            continue
        for c in range(n):
            s = goal[c]
            na, ns = len(s.ante), len(s.succ)
            if r in (R.ew, R.ec, R.ee, R.impRprime, R.forallRss, R.forallRms):
                yield RuleInstance(r, comp=c)
            elif r in (R.iwL, R.icL, R.ieL, R.andL1, R.andL2, R.orL, R.impL, R.existsLs, R.existsLm):
                for i in range(na):
                    yield RuleInstance(r, comp=c, pos=i)
            elif r in (R.iwR, R.icR, R.ieR, R.andR, R.orR1, R.orR2, R.impR, R.forallRmm, R.forallRsm):
                for i in range(ns):
                    yield RuleInstance(r, comp=c, pos=i)
            elif r is R.forallL:
                for i in range(na):
                    for t in witnesses:
                        yield RuleInstance(r, comp=c, pos=i, witness=t)
            elif r is R.existsR:
                for i in range(ns):
                    for t in witnesses:
                        yield RuleInstance(r, comp=c, pos=i, witness=t)
            elif r is R.cut:
                for d in cut_pool:
                    for k in range(na + 1):
                        for m in range(ns + 1):
                            yield RuleInstance(r, comp=c, split=k, split2=m, cut_formula=d)
            elif r in SPLITTING:
                for j in range(n):
                    if j == c:
                        continue
                    if r is R.com:
                        for k in range(na + 1):
                            for m in range(len(goal[j].ante) + 1):
                                yield RuleInstance(r, comp=c, comp2=j, split=k, split2=m)
                    else:
                        yield RuleInstance(r, comp=c, comp2=j)
            elif r in SHARING:
                names = sorted({v.name for v in free_vars(goal)})
                for x in names:
                    yield RuleInstance(r, comp=c, variable=x)


def applicable_rules(cfg: CalculusConfig, goal: Hypersequent, witnesses=(), cut_pool=()) -> list:
    """Every rule instance whose premises_of succeeds on `goal`.

    Complete for rules without term/formula parameters; (forall-L), (exists-R)
    and (cut) draw their witness/cut formula from the given pools.
    """
    out = []
    for inst in _candidates(cfg, goal, tuple(witnesses), tuple(cut_pool)):
        try:
            premises_of(cfg, inst, goal)
        except RuleError:
            continue
        out.append(inst)
    return out
