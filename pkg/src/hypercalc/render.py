"""Typeset proof trees: LaTeX (bussproofs) and a plain-text layout.

Both render the derivation bottom-up with conclusions under inference lines
and rule labels on the right, as proof figures are usually drawn.
"""
from __future__ import annotations

import re

from .calculus import LABELS, R
from .checker import ProofTree
from .syntax import (
    And, Bot, Forall, Formula, Hypersequent, Imp, Or, Sequent, Var,
    hyper_text, show,
)

GREEK = {
    "alpha", "beta", "gamma", "delta", "epsilon", "zeta", "eta", "theta", "iota", "kappa",
    "lambda", "mu", "nu", "xi", "pi", "rho", "sigma", "tau", "upsilon", "phi", "chi", "psi", "omega",
}
_LATEX_OPS = {Imp: r"\to", Or: r"\lor", And: r"\land"}
_LATEX_LABELS = {
    "∧": r"\land", "∨": r"\lor", "→": r"\to", "∀": r"\forall", "∃": r"\exists", "′": "'",
}


def _name(s: str) -> str:
    m = re.fullmatch(r"([A-Za-z]+)(\d*)", s)
    if not m:
        return r"\mathit{" + s.replace("_", r"\_") + "}"
    stem, idx = m.groups()
    if stem in GREEK:
        stem = "\\var" + stem if stem in ("phi", "epsilon", "theta") else "\\" + stem
    elif len(stem) > 1:
        stem = r"\mathit{" + stem + "}"
    return stem + (f"_{{{idx}}}" if idx else "")


def latex_term(t) -> str:
    if isinstance(t, Var):
        return _name(t.name) + (r"^{\mathrm{g}}" if t.scope == "global" else "")
    if not t.args:
        return r"\mathsf{" + t.symbol + "}"
    return _name(t.symbol) + "(" + ", ".join(map(latex_term, t.args)) + ")"


def _latex_atom(f) -> str:
    if isinstance(f, Bot):
        return r"\bot"
    head = _name(f.pred)
    return head + ("(" + ", ".join(map(latex_term, f.args)) + ")" if f.args else "")


def _latex_binder(f) -> str:
    q = r"\forall " if isinstance(f, Forall) else r"\exists "
    return q + latex_term(f.var) + r"\, "


def latex_formula(f: Formula) -> str:
    return show(f, _LATEX_OPS, _latex_atom, _latex_binder)


def latex_sequent(s: Sequent) -> str:
    lhs = ", ".join(map(latex_formula, s.ante))
    rhs = ", ".join(map(latex_formula, s.succ))
    return f"{lhs} \\Rightarrow {rhs}".strip()


def latex_hypersequent(h: Hypersequent) -> str:
    return r" \mid ".join(latex_sequent(s) for s in h)


def latex_label(rule) -> str:
    r"""E.g. ``(∀-R_ms)`` becomes ``$(\forall\text{-}\mathrm{R}_{\mathrm{ms}})$``."""
    out = []
    for tok in re.findall(r"_\w+|[A-Za-z]+|\d+|.", LABELS[R(rule)]):
        if tok.startswith("_"):
            out.append(r"_{\mathrm{" + tok[1:] + "}}")
        elif tok in _LATEX_LABELS:
            out.append(_LATEX_LABELS[tok])
        elif tok == "-":
            out.append(r"\text{-}")
        elif tok.isalpha():
            out.append(r"\mathrm{" + tok + "}")
        else:
            out.append(tok)
    return "$(" + "".join(out) + ")$"


def to_bussproofs(p: ProofTree) -> str:
    """A `prooftree` environment; needs ``\\usepackage{bussproofs}``."""
    lines = []

    def emit(node: ProofTree):
        for sub in node.subproofs:
            emit(sub)
        concl = "$" + latex_hypersequent(node.conclusion) + "$"
        n = len(node.subproofs)
        if n == 0 and node.rule.rule in (R.Id, R.Bot):
            lines.append(f"\\AxiomC{{{concl}}}")
            return
        if n == 0:
            lines.append(r"\AxiomC{}")
            n = 1
        lines.append(f"\\RightLabel{{\\scriptsize {latex_label(node.rule.rule)}}}")
        verb = {1: "Unary", 2: "Binary", 3: "Trinary"}[n]
        lines.append(f"\\{verb}InfC{{{concl}}}")

    emit(p)
    return "\\begin{prooftree}\n" + "\n".join(lines) + "\n\\end{prooftree}\n"


def latex_document(p: ProofTree, title: str | None = None) -> str:
    head = "\\documentclass{article}\n\\usepackage{amssymb}\n\\usepackage{bussproofs}\n"
    body = (f"\\section*{{{title}}}\n" if title else "") + to_bussproofs(p)
    return head + "\\begin{document}\n" + body + "\\end{document}\n"


# ------------------------------------------------------------ plain text

def _text_block(p: ProofTree) -> list:
    """Lines of a text figure, all padded to the same width."""
    concl = hyper_text(p.conclusion)
    label = f"({LABELS[p.rule.rule]})"
    if not p.subproofs:
        lines = ["-" * len(concl) + " " + label, concl]
    else:
        blocks = [_text_block(s) for s in p.subproofs]
        height = max(len(b) for b in blocks)
        blocks = [[" " * len(b[0])] * (height - len(b)) + b for b in blocks]
        top = ["   ".join(row) for row in zip(*blocks)]
        width = max(len(top[0]), len(concl))
        bar = "-" * width + " " + label
        lines = [row.center(width) for row in top] + [bar, concl.center(width)]
    w = max(map(len, lines))
    return [ln.ljust(w) for ln in lines]


def to_text_figure(p: ProofTree) -> str:
    return "\n".join(ln.rstrip() for ln in _text_block(p)) + "\n"


def to_outline(p: ProofTree) -> str:
    """Indented listing, root first; readable for wide trees."""
    out = []

    def walk(node, depth):
        out.append(f"{'  ' * depth}{hyper_text(node.conclusion)}   ({LABELS[node.rule.rule]})")
        for s in node.subproofs:
            walk(s, depth + 1)

    walk(p, 0)
    return "\n".join(out) + "\n"
