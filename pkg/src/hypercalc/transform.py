"""Hypersequent-to-formula translations and extraction of single-sequent proofs.

Extraction turns a proof of a hypersequent (in a calculus without any
component-splitting or sharing rule) into a plain sequent proof of one of
its components.  The result never has more steps, formula occurrences or
symbols than the input.
"""
from __future__ import annotations

import dataclasses
from enum import Enum
from functools import reduce

from .calculus import (
    AXIOMS, BINARY_RULES, R, SHARING, SPLITTING, RuleInstance, preset,
)
from .checker import ProofTree, check_proof
from .syntax import (
    BOT, And, Forall, Formula, Hypersequent, Imp, Or, Sequent, free_vars_ordered,
    has_global,
)


class TranslationMode(str, Enum):
    SHARED = "shared"
    LOCAL = "local"


class GlobalVariablePresent(ValueError):
    pass


class PreconditionViolated(ValueError):
    pass


def _right_nested(op, fs):
    return reduce(lambda acc, f: op(f, acc), reversed(fs[:-1]), fs[-1])


def sequent_formula(s: Sequent) -> Formula:
    succ = _right_nested(Or, list(s.succ)) if s.succ else BOT
    if not s.ante:
        return succ
    return Imp(_right_nested(And, list(s.ante)), succ)


def _close(f: Formula, variables) -> Formula:
    for v in reversed(variables):
        f = Forall(v, f)
    return f


def hyperseq_formula(h: Hypersequent, mode: TranslationMode = TranslationMode.SHARED) -> Formula:
    if has_global(h):
        raise GlobalVariablePresent("hypersequents with global variables have no fixed formula reading")
    mode = TranslationMode(mode)
    if mode is TranslationMode.SHARED:
        body = _right_nested(Or, [sequent_formula(s) for s in h])
        return _close(body, free_vars_ordered(h))
    return _right_nested(Or, [_close(sequent_formula(s), free_vars_ordered(s)) for s in h])


# -------------------------------------------------------------- extraction

_FORBIDDEN = SPLITTING | SHARING
_REPLAY = {R.forallRms: R.forallRss, R.existsLm: R.existsLs}


def _single(p: ProofTree, c: int, rule: RuleInstance, subs) -> ProofTree:
    inst = dataclasses.replace(rule, rule=_REPLAY.get(rule.rule, rule.rule), comp=0)
    return ProofTree(Hypersequent((p.conclusion[c],)), inst, tuple(subs))


def _extract(p: ProofTree) -> tuple:
    inst = p.rule
    r, c = inst.rule, inst.comp
    if r in AXIOMS:
        return 0, p
    if r is R.ew:
        i, q = _extract(p.subproofs[0])
        return (i if i < c else i + 1), q
    if r is R.ec:
        i, q = _extract(p.subproofs[0])
        return (c if i == c + 1 else i - 1 if i > c + 1 else i), q
    if r is R.ee:
        i, q = _extract(p.subproofs[0])
        return {c: c + 1, c + 1: c}.get(i, i), q
    if r in BINARY_RULES:
        subs = []
        for sub in p.subproofs:
            i, q = _extract(sub)
            if i != c:
                return i, q
            subs.append(q)
        return c, _single(p, c, inst, subs)
    i, q = _extract(p.subproofs[0])
    if i != c:
        return i, q
    return c, _single(p, c, inst, [q])


def extract_component_proof(p: ProofTree) -> tuple:
    """(index, q): q is a width-1 proof of the root's component at index."""
    used = {n.rule.rule for n in p.nodes()}
    bad = used & _FORBIDDEN
    if bad:
        raise PreconditionViolated(f"extraction does not apply to proofs using {', '.join(sorted(map(str, bad)))}")
    report = check_proof(preset("CD-free"), p)
    if not report.accepted:
        raise PreconditionViolated(f"proof is not accepted under CD-free: {report.summary()}")
    return _extract(p)
