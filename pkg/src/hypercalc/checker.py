"""Proof trees, the proof checker, proof statistics and the proof file format."""
from __future__ import annotations

import dataclasses
import json
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from .calculus import (
    Base, CalculusConfig, RuleError, RuleId, RuleInstance, premises_of, preset,
)
from .syntax import (
    Hypersequent, Sequent, hyper_text, parse_formula, parse_hypersequent,
    Var, parse_term, sequent_alpha_equal, size, subst_term, substitute,
)


@dataclass(frozen=True)
class ProofTree:
    conclusion: Hypersequent
    rule: RuleInstance
    subproofs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "subproofs", tuple(self.subproofs))

    def nodes(self):
        """Pre-order traversal."""
        yield self
        for p in self.subproofs:
            yield from p.nodes()

    def height(self) -> int:
        return 1 + max((p.height() for p in self.subproofs), default=0)


@dataclass
class CheckError:
    path: tuple
    kind: str
    message: str

    def as_dict(self) -> dict:
        return {"path": list(self.path), "kind": self.kind, "message": self.message}


@dataclass
class CheckReport:
    verdict: str
    steps: int
    rule_histogram: dict = field(default_factory=dict)
    error: CheckError | None = None

    @property
    def accepted(self) -> bool:
        return self.verdict == "accepted"

    def as_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "steps": self.steps,
            "rule_histogram": dict(sorted(self.rule_histogram.items())),
            "error": self.error.as_dict() if self.error else None,
        }

    def summary(self) -> str:
        if self.accepted:
            return f"accepted, {self.steps} steps"
        e = self.error
        return f"rejected: {e.kind} at path {list(e.path)}: {e.message}"


def _first_error(cfg: CalculusConfig, p: ProofTree, path: tuple) -> CheckError | None:
    # leftmost-innermost: subtrees first
    for k, sub in enumerate(p.subproofs):
        err = _first_error(cfg, sub, path + (k,))
        if err:
            return err
    try:
        premises = premises_of(cfg, p.rule, p.conclusion)
    except RuleError as e:
        return CheckError(path, e.kind, str(e))
    if len(premises) != len(p.subproofs):
        return CheckError(path, "PremiseCount",
                          f"({p.rule.rule}) needs {len(premises)} premises, got {len(p.subproofs)}")
    for k, (want, sub) in enumerate(zip(premises, p.subproofs)):
        got = sub.conclusion
        if len(want) != len(got) or not all(map(sequent_alpha_equal, want, got)):
            return CheckError(path, "PremiseMismatch",
                              f"premise {k} should be `{hyper_text(want)}`, subproof proves `{hyper_text(got)}`")
    return None


def check_proof(cfg: CalculusConfig, p: ProofTree) -> CheckReport:
    hist = Counter(str(n.rule.rule) for n in p.nodes())
    err = _first_error(cfg, p, ())
    return CheckReport(
        verdict="rejected" if err else "accepted",
        steps=sum(hist.values()),
        rule_histogram=dict(hist),
        error=err,
    )


@dataclass(frozen=True, order=True)
class ProofStats:
    steps: int
    formulas: int
    symbols: int

    def dominated_by(self, other: "ProofStats") -> bool:
        return self.steps <= other.steps and self.formulas <= other.formulas and self.symbols <= other.symbols


def proof_stats(p: ProofTree) -> ProofStats:
    steps = formulas = symbols = 0
    for n in p.nodes():
        steps += 1
        for f in n.conclusion.formulas():
            formulas += 1
            symbols += size(f)
    return ProofStats(steps, formulas, symbols)


def rename_tree(p: ProofTree, x, y) -> ProofTree:
    """Rename variable x to y throughout (conclusions and parameters)."""
    def seq(s):
        return Sequent(tuple(substitute(f, x, y) for f in s.ante), tuple(substitute(f, x, y) for f in s.succ))

    inst = p.rule
    changes = {}
    if inst.eigenvariable == x:
        changes["eigenvariable"] = y
    if inst.witness is not None:
        changes["witness"] = subst_term(inst.witness, x, y)
    if inst.cut_formula is not None:
        changes["cut_formula"] = substitute(inst.cut_formula, x, y)
    if changes:
        inst = dataclasses.replace(inst, **changes)
    return ProofTree(
        Hypersequent(tuple(seq(s) for s in p.conclusion)),
        inst,
        tuple(rename_tree(s, x, y) for s in p.subproofs),
    )


# -------------------------------------------------------- checked building

@dataclass(frozen=True)
class Step:
    rule: RuleId
    subs: tuple
    params: dict


def step(rule, *subs, **params) -> Step:
    """One inference of a proof written root-first; see `derive`."""
    return Step(RuleId(rule), subs, params)


def derive(cfg: CalculusConfig, conclusion: Hypersequent, s: Step) -> ProofTree:
    """Expand a root-first script into a proof tree, computing every premise.

    Raises RuleError at the first inference that does not apply.
    """
    params = dict(s.params)
    for key, parse in (("cut_formula", parse_formula), ("witness", parse_term), ("eigenvariable", parse_term)):
        if isinstance(params.get(key), str):
            params[key] = parse(params[key])
    inst = RuleInstance(s.rule, **params)
    premises = premises_of(cfg, inst, conclusion)
    if len(premises) != len(s.subs):
        raise ValueError(f"({s.rule}) has {len(premises)} premises, script gives {len(s.subs)}")
    return ProofTree(conclusion, inst, tuple(derive(cfg, p, sub) for p, sub in zip(premises, s.subs)))


# ------------------------------------------------------------- file format

def _params_to_json(inst: RuleInstance) -> dict:
    out = {}
    for k, v in inst.params().items():
        if k == "cut_formula":
            out["cut"] = str(v)
        elif k in ("witness", "eigenvariable"):
            out[k] = str(v)
        else:
            out[k] = v
    return out


def proof_to_json(p: ProofTree) -> dict:
    return {
        "rule": str(p.rule.rule),
        "conclusion": hyper_text(p.conclusion),
        "params": _params_to_json(p.rule),
        "premises": [proof_to_json(s) for s in p.subproofs],
    }


def proof_from_json(d: dict, arities: dict | None = None) -> ProofTree:
    arities = {} if arities is None else arities
    params = dict(d.get("params") or {})
    kwargs = {}
    for k, v in params.items():
        if k == "cut":
            kwargs["cut_formula"] = parse_formula(v, arities)
        elif k == "witness":
            kwargs["witness"] = parse_term(v, arities)
        elif k == "eigenvariable":
            y = parse_term(v, arities)
            if not isinstance(y, Var):
                raise ValueError(f"eigenvariable must be a variable, got {v!r}")
            kwargs["eigenvariable"] = y
        elif k in ("comp", "comp2", "pos", "split", "split2"):
            kwargs[k] = int(v)
        elif k == "variable":
            kwargs[k] = str(v)
        else:
            raise ValueError(f"unknown proof parameter {k!r}")
    try:
        rule = RuleId(d["rule"])
    except ValueError:
        raise ValueError(f"unknown rule {d['rule']!r}") from None
    return ProofTree(
        parse_hypersequent(d["conclusion"], arities),
        RuleInstance(rule, **kwargs),
        tuple(proof_from_json(s, arities) for s in d.get("premises", [])),
    )


@dataclass
class ProofBundle:
    """A proof together with the calculus it is meant for."""
    proof: ProofTree
    calculus: dict = field(default_factory=lambda: {"preset": "HLK"})
    name: str | None = None

    def config(self) -> CalculusConfig:
        return config_from_json(self.calculus)

    def as_dict(self) -> dict:
        d = {"calculus": self.calculus, "proof": proof_to_json(self.proof)}
        if self.name:
            d = {"name": self.name, **d}
        return d


def config_from_json(spec: dict) -> CalculusConfig:
    """``{"preset": name}`` or ``{"base": ..., "quantifiers": bool, "width_cap": n}``,
    either with optional ``enable``/``disable`` rule lists."""
    if "preset" in spec:
        cfg = preset(spec["preset"])
    else:
        cfg = CalculusConfig(Base(spec["base"]), quantifiers_enabled=bool(spec.get("quantifiers")),
                             width_cap=spec.get("width_cap"))
    enable, disable = spec.get("enable", []), spec.get("disable", [])
    if enable or disable:
        cfg = cfg.with_rules(enable, disable)
    return cfg


def load_bundle(path) -> ProofBundle:
    d = json.loads(Path(path).read_text(encoding="utf-8"))
    return ProofBundle(proof_from_json(d["proof"]), d.get("calculus", {"preset": "HLK"}), d.get("name"))


def dump_bundle(bundle: ProofBundle, path) -> None:
    Path(path).write_text(json.dumps(bundle.as_dict(), indent=1, ensure_ascii=False) + "\n", encoding="utf-8")
