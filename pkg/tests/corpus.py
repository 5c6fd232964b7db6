"""Checker-accepted proofs in the calculus without splitting or sharing rules.

Some are written by hand with `derive`, the rest are found by search.  Every
formula uses at most two predicate symbols so the semantic sweep stays cheap.
"""
from functools import lru_cache

from hypercalc.calculus import preset
from hypercalc.checker import derive, step as S
from hypercalc.search import SearchBudget, search
from hypercalc.syntax import parse_hypersequent

CD_FREE = preset("CD-free")
I = S("Id")

TWELVE = "forall x. Q(x) |- forall x. Q(x) || forall x. P(x) & Q(x) |- forall y. P(y)"


def _twelve():
    left = S("forallL", S("ew", I, comp=1), witness="y")
    right = S("icL", S("andL1", S("ieL", S("iwL", S("ew", I, comp=1)))))
    cut = S("cut", left, right, split=1, split2=0, cut_formula="P(y) & Q(y)")
    return S("ee", S("forallRms", cut, eigenvariable="y"))


HAND = {
    "twelve": (TWELVE, _twelve),
    "weak-left": ("|- q || p |- p", lambda: S("ew", I, comp=0)),
    "or-right": ("p |- p \\/ q || q |- p", lambda: S("ew", S("orR1", I), comp=1)),
    "contracted": ("p & q |- q", lambda: S("ec", S("ew", S("andL2", I), comp=1))),
    "exchanged": ("q |- || p |- p & p",
                  lambda: S("ee", S("ew", S("andR", I, I), comp=1))),
    "exists-m": ("exists x. P(x) |- exists y. P(y) || |- q",
                 lambda: S("existsLm", S("existsR", S("ew", I, comp=1), witness="z"), eigenvariable="z")),
    "impl-both": ("p -> q, p |- q || q |- p",
                  lambda: S("impL", S("ew", S("iwR", I, pos=0), comp=1), S("ew", S("iwL", I, pos=1), comp=1), pos=0)),
}

SEARCHED = [
    "|- p & q -> q & p",
    "|- p \\/ q -> q \\/ p",
    "|- (p -> q) -> ~q -> ~p",
    "|- p -> ~~p",
    "|- ~~~p -> ~p",
    "|- (p \\/ q -> q) -> (p -> q) & (q -> q)",
    "|- p & (q \\/ p) -> p & q \\/ p & p",
    "|- (p -> q -> q) -> p & q -> q",
    "|- (forall x. P(x)) -> P(y)",
    "|- P(y) -> exists x. P(x)",
    "|- (forall x. P(x) & Q(x)) -> forall x. P(x)",
    "|- (exists x. P(x) \\/ Q(x)) -> (exists x. P(x)) \\/ (exists x. Q(x))",
    "|- (exists x. P(x)) -> ~(forall x. ~P(x))",
    "|- (forall x. P(x) -> Q(x)) -> (exists x. P(x)) -> exists x. Q(x)",
    "|- (forall x. P(x) -> Q(x)) -> (forall x. P(x)) -> forall x. Q(x)",
    "|- ~(exists x. P(x)) -> forall x. ~P(x)",
    "|- (forall x. P(x)) & (forall x. Q(x)) -> forall x. P(x) & Q(x)",
    "forall x. P(x) |- P(y) || Q(y) |-",
    "p |- q || p |- p",
]


def _hand(name):
    goal, script = HAND[name]
    return derive(CD_FREE, parse_hypersequent(goal), script())


@lru_cache(maxsize=None)
def corpus():
    """Pairs (name, proof)."""
    out = [(name, _hand(name)) for name in HAND]
    budget = SearchBudget(max_depth=8, witnesses=("x", "y"))
    for goal in SEARCHED:
        res = search(CD_FREE, parse_hypersequent(goal), budget)
        assert res.found, goal
        out.append((goal, res.proof))
    return tuple(out)
