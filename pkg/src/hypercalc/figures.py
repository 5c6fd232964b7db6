"""Transcriptions of the six worked proof figures, fully expanded.

Abbreviated multi-step inferences are spelled out one rule at a time.  Where a
figure applies (cut) with an unshared side context, the missing context is
added by (ew) so that cut stays context-sharing.

``python -m hypercalc.figures DIR`` writes each figure as a proof file.
"""
from __future__ import annotations

import sys
from pathlib import Path

from .checker import ProofBundle, config_from_json, derive, dump_bundle, step as S
from .syntax import parse_hypersequent

LIN = "(phi -> psi) \\/ (psi -> phi)"
ACD = "(forall x. phi \\/ psi(x)) -> phi \\/ (forall x. psi(x))"
GDM = "(gamma1 & gamma2 -> delta) -> (gamma1 -> delta) \\/ (gamma2 -> delta)"
REMARK = "phi & (exists x. psi(x)) -> exists x. phi & psi(x)"

_ID = S("Id")


def _fact13():
    return S("ec",
             S("orR1",
               S("ee",
                 S("orR2",
                   S("impRprime",
                     S("impRprime",
                       S("com", _ID, _ID, comp2=1),
                       comp=1))))))


def _fact15():
    # phi \/ psi(x) |- phi || phi |- psi(x)  via (ee) then (or-L)
    left = S("ee",
             S("orL",
               S("ew", _ID, comp=1),
               S("com", _ID, _ID, comp=1, comp2=0)))
    return S("impRprime",
             S("ec",
               S("orR2",
                 S("orR1",
                   S("forallRms",
                     S("forallL",
                       S("forallL",
                         S("orL", left, S("ew", _ID, comp=1)),
                         comp=1, witness="x"),
                       witness="x")),
                   comp=1))))


def _remark():
    left = S("ee",
             S("andR",
               S("ew", _ID, comp=1),
               S("com", _ID, _ID, comp=1, comp2=0)))
    return S("impRprime",
             S("ec",
               S("andL2",
                 S("andL1",
                   S("existsLm",
                     S("existsR",
                       S("existsR",
                         S("andR", left, S("ew", _ID, comp=1)),
                         comp=1, witness="x"),
                       witness="x")),
                   comp=1))))


def _lin_rs():
    closing = S("orL",
                S("iwR", _ID),
                S("ieR", S("iwR", _ID)))
    inner_cut = S("cut",
                  S("ew", S("orR2", _ID), comp=1),
                  S("rs", closing, comp2=1),
                  split=1, split2=0, cut_formula="phi \\/ psi")
    outer_cut = S("cut",
                  S("ew", S("orR1", _ID), comp=1),
                  S("ee", inner_cut),
                  split=1, split2=0, cut_formula="phi \\/ psi")
    return S("ec",
             S("orR1",
               S("orR2",
                 S("impRprime",
                   S("impRprime", outer_cut, comp=1)),
                 comp=1)))


def _acd_rs():
    return S("impRprime",
             S("ec",
               S("orR1",
                 S("orR2",
                   S("forallRms",
                     S("rs",
                       S("forallL",
                         S("orL",
                           S("iwR", _ID),
                           S("ieR", S("iwR", _ID))),
                         witness="x"),
                       comp2=1),
                     comp=1),
                   comp=1))))


def _gdm_ls():
    conj = S("andR",
             S("ieL", S("iwL", _ID)),
             S("iwL", _ID))
    imp_left = S("impL",
                 S("iwR", conj, pos=0),
                 S("iwL", S("iwL", _ID, pos=1), pos=1))
    return S("impRprime",
             S("ec",
               S("orR1",
                 S("orR2",
                   S("impRprime",
                     S("impRprime",
                       S("ls",
                         S("iwL", S("ieL", imp_left), pos=3),
                         comp2=1),
                       comp=1)),
                   comp=1))))


# name -> (goal, calculus, script, characteristic rules)
FIGURES = {
    "fact13": (LIN, {"preset": "GD-com"}, _fact13, ("com",)),
    "fact15": (ACD, {"preset": "QGD-com"}, _fact15, ("com", "forallRms")),
    "remark": (REMARK, {"preset": "LIN-pred", "enable": ["existsLm"]}, _remark, ("com", "existsLm")),
    "lin_rs": (LIN, {"preset": "GD-rs"}, _lin_rs, ("rs",)),
    "acd_rs": (ACD, {"preset": "QGD-rs"}, _acd_rs, ("rs", "forallRms")),
    "gdm_ls": (GDM, {"preset": "GD-ls"}, _gdm_ls, ("ls",)),
}


def figure(name: str) -> ProofBundle:
    goal, calculus, script, _ = FIGURES[name]
    cfg = config_from_json(calculus)
    proof = derive(cfg, parse_hypersequent(f"|- {goal}"), script())
    return ProofBundle(proof, dict(calculus), name)


def characteristic_rules(name: str) -> tuple:
    return FIGURES[name][3]


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    out = Path(argv[0] if argv else ".")
    out.mkdir(parents=True, exist_ok=True)
    for name in FIGURES:
        dump_bundle(figure(name), out / f"{name}.proof")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
