"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 negative result
(proof rejected, no proof within budget, no countermodel, refused
transformation), 4 internal error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import render
from .calculus import Base, CalculusConfig, RuleId, preset
from .checker import ProofBundle, check_proof, dump_bundle, load_bundle, proof_stats
from .search import SearchBudget, search
from .semantics import (
    BoundsTooLarge, ModelClass, countermodel_search, dump_model, model_class_for,
)
from .syntax import ParseError, free_vars, hyper_text, parse_formula, parse_hypersequent, to_text
from .transform import (
    GlobalVariablePresent, PreconditionViolated, TranslationMode, extract_component_proof,
    hyperseq_formula,
)

OK, USAGE, PARSE, NEGATIVE, INTERNAL = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE)


def _read_text(arg: str) -> str:
    p = Path(arg)
    if p.is_file():
        return p.read_text(encoding="utf-8").strip()
    return arg


def _csv(text: str) -> list:
    return [t.strip() for t in text.split(",") if t.strip()]


def _rule_list(values) -> list:
    out = []
    for v in values or []:
        for name in _csv(v):
            try:
                out.append(RuleId(name))
            except ValueError:
                raise UsageError(f"unknown rule {name!r}") from None
    return out


def _explicit(args) -> bool:
    explicit = args.base is not None or args.quantifiers or args.width_cap is not None
    if args.preset and explicit:
        raise UsageError("--preset cannot be combined with --base/--quantifiers/--width-cap")
    return explicit


def calculus_from_args(args, fallback: CalculusConfig | None = None) -> CalculusConfig:
    explicit = _explicit(args)
    try:
        if args.preset:
            cfg = preset(args.preset)
        elif explicit:
            cfg = CalculusConfig(Base(args.base or "ljprime"), quantifiers_enabled=args.quantifiers,
                                 width_cap=args.width_cap)
        elif fallback is not None:
            cfg = fallback
        else:
            raise UsageError("choose a calculus with --preset or --base")
        enable, disable = _rule_list(args.enable), _rule_list(args.disable)
        if enable or disable:
            cfg = cfg.with_rules(enable, disable)
    except (KeyError, ValueError) as e:
        raise UsageError(str(e).strip("'\"")) from None
    return cfg


def _calculus_flags(p):
    g = p.add_argument_group("calculus")
    g.add_argument("--preset", help="named calculus, e.g. HLJ, GD-com, QGD-rs, CD-free")
    g.add_argument("--base", choices=[b.value for b in Base], help="base calculus when not using a preset")
    g.add_argument("--quantifiers", action="store_true", help="add the quantifier rules (explicit base)")
    g.add_argument("--width-cap", type=int, help="maximum number of components (explicit base)")
    g.add_argument("--enable", action="append", metavar="RULE", help="enable rule(s), comma separated")
    g.add_argument("--disable", action="append", metavar="RULE", help="disable rule(s), comma separated")


def _emit(args, human: str, machine: dict):
    if args.format == "machine":
        print(json.dumps(machine, ensure_ascii=False, sort_keys=True))
    else:
        print(human)


def _goal(text: str):
    text = _read_text(text)
    return parse_hypersequent(text if "|-" in text else f"|- {text}")


# ---------------------------------------------------------------- commands

def cmd_check(args) -> int:
    _explicit(args)
    _rule_list(args.enable), _rule_list(args.disable)
    bundle = load_bundle(args.proof)
    cfg = calculus_from_args(args, fallback=bundle.config())
    report = check_proof(cfg, bundle.proof)
    machine = report.as_dict()
    machine["calculus"] = cfg.label()
    _emit(args, report.summary(), machine)
    return OK if report.accepted else NEGATIVE


def cmd_prove(args) -> int:
    cfg = calculus_from_args(args)
    goal = _goal(args.goal)
    budget = SearchBudget(max_depth=args.depth, max_width=args.max_width,
                          max_contractions=args.contractions,
                          witnesses=tuple(_csv(args.witnesses or "")),
                          cut_pool=tuple(args.cut or ()))
    out = search(cfg, goal, budget)
    if out.found:
        stats = proof_stats(out.proof)
        if args.output:
            dump_bundle(ProofBundle(out.proof, _calculus_record(args, cfg)), args.output)
        human = f"found at depth {out.depth}, {stats.steps} steps"
        if args.output:
            human += f"; written to {args.output}"
    elif out.exhausted:
        human = f"no proof: search space exhausted at depth {out.depth}"
    else:
        human = f"not found within budget (depth {args.depth})"
    _emit(args, human, {"found": out.found, "exhausted": out.exhausted, "depth": out.depth,
                        "nodes": out.nodes, "steps": proof_stats(out.proof).steps if out.found else None})
    return OK if out.found else NEGATIVE


def _calculus_record(args, cfg: CalculusConfig) -> dict:
    if args.preset:
        rec = {"preset": args.preset}
    else:
        rec = {"base": cfg.base.value, "quantifiers": cfg.quantifiers_enabled}
        if cfg.width_cap is not None:
            rec["width_cap"] = cfg.width_cap
    if args.enable:
        rec["enable"] = [str(r) for r in _rule_list(args.enable)]
    if args.disable:
        rec["disable"] = [str(r) for r in _rule_list(args.disable)]
    return rec


def cmd_translate(args) -> int:
    h = _goal(args.hypersequent)
    try:
        f = hyperseq_formula(h, TranslationMode(args.mode))
    except GlobalVariablePresent as e:
        print(f"error: {e}", file=sys.stderr)
        return NEGATIVE
    _emit(args, to_text(f), {"formula": to_text(f), "mode": args.mode})
    return OK


def cmd_extract(args) -> int:
    bundle = load_bundle(args.proof)
    try:
        index, q = extract_component_proof(bundle.proof)
    except PreconditionViolated as e:
        print(f"refused: {e}", file=sys.stderr)
        return NEGATIVE
    if args.output:
        dump_bundle(ProofBundle(q, {"preset": "LJ'"}, bundle.name), args.output)
    human = f"index: {index}\ncomponent: {hyper_text(q.conclusion)}"
    _emit(args, human, {"index": index, "component": hyper_text(q.conclusion),
                        "steps": proof_stats(q).steps, "output": args.output})
    return OK


def cmd_countermodel(args) -> int:
    text = _read_text(args.formula)
    if "|-" in text:
        f = hyperseq_formula(parse_hypersequent(text))
    else:
        f = parse_formula(text)
    if free_vars(f):
        raise UsageError("formula must be closed")
    max_worlds = args.max_worlds
    if args.model_class:
        cls = ModelClass(args.model_class)
    elif args.preset or args.base:
        cls, cap = model_class_for(calculus_from_args(args))
        if cap:
            max_worlds = min(max_worlds, cap)
    else:
        cls = ModelClass.ALL_POSETS
    try:
        m = countermodel_search(f, cls, max_worlds, args.max_domain, args.max_atoms)
    except BoundsTooLarge as e:
        raise UsageError(str(e)) from None
    if m is None:
        _emit(args, "none within bounds", {"model": None, "class": cls.value})
        return NEGATIVE
    _emit(args, dump_model(m).rstrip(), {"model": dump_model(m), "class": cls.value})
    return OK


def cmd_export(args) -> int:
    bundle = load_bundle(args.proof)
    p = bundle.proof
    if args.to == "latex":
        out = render.to_bussproofs(p)
    elif args.to == "document":
        out = render.latex_document(p, bundle.name)
    elif args.to == "outline":
        out = render.to_outline(p)
    else:
        out = render.to_text_figure(p)
    if args.output:
        Path(args.output).write_text(out, encoding="utf-8")
    else:
        sys.stdout.write(out)
    return OK


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="hypercalc", description="Hypersequent calculi for intermediate logics.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(fn=fn)
        p.add_argument("--format", choices=["human", "machine"], default="human")
        return p

    p = command("check", cmd_check, "check a proof file")
    _calculus_flags(p)
    p.add_argument("proof")

    p = command("prove", cmd_prove, "search for a proof")
    _calculus_flags(p)
    p.add_argument("goal", help="hypersequent or formula text, or a file containing it")
    p.add_argument("--depth", type=int, default=12)
    p.add_argument("--max-width", type=int, default=4)
    p.add_argument("--contractions", type=int, default=2)
    p.add_argument("--witnesses", help="witness terms, comma separated")
    p.add_argument("--cut", action="append", metavar="FORMULA", help="add a cut formula to the pool")
    p.add_argument("-o", "--output")

    p = command("translate", cmd_translate, "translate a hypersequent to a closed formula")
    p.add_argument("hypersequent", help="hypersequent text or a file containing it")
    p.add_argument("--mode", choices=[m.value for m in TranslationMode], default="shared")

    p = command("extract", cmd_extract, "extract a single-sequent proof")
    p.add_argument("proof")
    p.add_argument("-o", "--output")

    p = command("countermodel", cmd_countermodel, "search for a finite Kripke countermodel")
    _calculus_flags(p)
    p.add_argument("formula", help="closed formula or hypersequent, or a file containing it")
    p.add_argument("--class", dest="model_class", choices=[c.value for c in ModelClass])
    p.add_argument("--max-worlds", type=int, default=3)
    p.add_argument("--max-domain", type=int, default=2)
    p.add_argument("--max-atoms", type=int, default=3)

    p = command("export", cmd_export, "typeset a proof file")
    p.add_argument("proof")
    p.add_argument("--to", choices=["latex", "document", "text", "outline"], default="latex")
    p.add_argument("-o", "--output")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.fn(args)
    except UsageError as e:
        print(f"hypercalc: error: {e}", file=sys.stderr)
        return USAGE
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        if e.text:
            print(f"  {e.text}\n  {' ' * e.pos}^", file=sys.stderr)
        return PARSE
    except (OSError, ValueError, KeyError) as e:
        # unreadable or malformed input files
        print(f"parse error: {e}", file=sys.stderr)
        return PARSE
    except Exception as e:  # pragma: no cover
        print(f"internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return INTERNAL


if __name__ == "__main__":
    raise SystemExit(main())
