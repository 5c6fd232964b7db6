"""First-order terms and formulas, sequents, hypersequents, and their text syntax.

Grammar (ASCII)::

    formula  ::= ('forall' | 'exists') ident '.' formula | imp
    imp      ::= or ('->' formula)?                 right associative
    or       ::= and ('\\/' and)*                    left associative
    and      ::= unary ('&' unary)*                 left associative
    unary    ::= '~' unary | 'bot' | 'top' | atom | '(' formula ')'
               | ('forall' | 'exists') ident '.' formula
    atom     ::= ident ('(' term (',' term)* ')')?
    term     ::= ident '!'? | ident '(' [term (',' term)*] ')'
    sequent  ::= [formula (',' formula)*] '|-' [formula (',' formula)*]
    hyper    ::= sequent ('||' sequent)*

A bare identifier in term position is a variable (``x!`` is the global
variable ``x``); constants are written as nullary applications ``c()``.
``~a`` and ``top`` are read as ``a -> bot`` and ``bot -> bot``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

LOCAL = "local"
GLOBAL = "global"

KEYWORDS = frozenset({"forall", "exists", "bot", "top"})


# ---------------------------------------------------------------- terms

@dataclass(frozen=True, slots=True)
class Var:
    name: str
    scope: str = LOCAL

    def __str__(self) -> str:
        return self.name + ("!" if self.scope == GLOBAL else "")


@dataclass(frozen=True, slots=True)
class Fn:
    symbol: str
    args: tuple = ()

    def __str__(self) -> str:
        return f"{self.symbol}({', '.join(map(str, self.args))})"


Term = Union[Var, Fn]


# ------------------------------------------------------------- formulas

@dataclass(frozen=True, slots=True)
class Bot:
    def __str__(self) -> str:
        return "bot"


@dataclass(frozen=True, slots=True)
class Atom:
    pred: str
    args: tuple = ()

    def __str__(self) -> str:
        if not self.args:
            return self.pred
        return f"{self.pred}({', '.join(map(str, self.args))})"


@dataclass(frozen=True, slots=True)
class And:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True, slots=True)
class Or:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True, slots=True)
class Imp:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True, slots=True)
class Forall:
    var: Var
    body: "Formula"

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True, slots=True)
class Exists:
    var: Var
    body: "Formula"

    def __str__(self) -> str:
        return to_text(self)


Formula = Union[Bot, Atom, And, Or, Imp, Forall, Exists]
BINARY = (And, Or, Imp)
QUANTIFIERS = (Forall, Exists)

BOT = Bot()
TOP = Imp(BOT, BOT)


def neg(f: Formula) -> Formula:
    return Imp(f, BOT)


# ------------------------------------------------- sequents/hypersequents

@dataclass(frozen=True, slots=True)
class Sequent:
    ante: tuple = ()
    succ: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "ante", tuple(self.ante))
        object.__setattr__(self, "succ", tuple(self.succ))

    def formulas(self) -> Iterator[Formula]:
        yield from self.ante
        yield from self.succ

    def __str__(self) -> str:
        return sequent_text(self)


@dataclass(frozen=True, slots=True)
class Hypersequent:
    components: tuple

    def __post_init__(self):
        comps = tuple(self.components)
        if not comps:
            raise ValueError("a hypersequent needs at least one component")
        object.__setattr__(self, "components", comps)

    def __len__(self) -> int:
        return len(self.components)

    def __getitem__(self, i: int) -> Sequent:
        return self.components[i]

    def __iter__(self):
        return iter(self.components)

    def formulas(self) -> Iterator[Formula]:
        for s in self.components:
            yield from s.formulas()

    def __str__(self) -> str:
        return hyper_text(self)


def hyper(*components: Sequent) -> Hypersequent:
    return Hypersequent(components)


# ------------------------------------------------------- free variables

def term_vars(t: Term) -> Iterator[Var]:
    if isinstance(t, Var):
        yield t
    else:
        for a in t.args:
            yield from term_vars(a)


def _free_occurrences(f: Formula, bound: frozenset) -> Iterator[Var]:
    """Free variables in left-to-right order of occurrence (with repeats)."""
    if isinstance(f, Atom):
        for a in f.args:
            for v in term_vars(a):
                if v not in bound:
                    yield v
    elif isinstance(f, BINARY):
        yield from _free_occurrences(f.left, bound)
        yield from _free_occurrences(f.right, bound)
    elif isinstance(f, QUANTIFIERS):
        yield from _free_occurrences(f.body, bound | {f.var})


def free_vars(x) -> frozenset:
    """Free variables of a formula, term, sequent or hypersequent."""
    return frozenset(free_vars_ordered(x))


def free_vars_ordered(x) -> list:
    """Free variables in order of first occurrence, left to right."""
    if isinstance(x, (Var, Fn)):
        items = term_vars(x)
    elif isinstance(x, (Sequent, Hypersequent)):
        items = (v for f in x.formulas() for v in _free_occurrences(f, frozenset()))
    else:
        items = _free_occurrences(x, frozenset())
    return list(dict.fromkeys(items))


def has_global(x) -> bool:
    return any(v.scope == GLOBAL for v in free_vars(x)) or _binds_global(x)


def _binds_global(x) -> bool:
    if isinstance(x, (Sequent, Hypersequent)):
        return any(_binds_global(f) for f in x.formulas())
    if isinstance(x, QUANTIFIERS):
        return x.var.scope == GLOBAL or _binds_global(x.body)
    if isinstance(x, BINARY):
        return _binds_global(x.left) or _binds_global(x.right)
    return False


def all_var_names(f) -> set:
    """Every variable name occurring in f, free or bound."""
    names = set()

    def walk(g):
        if isinstance(g, Var):
            names.add(g.name)
        elif isinstance(g, Fn):
            for a in g.args:
                walk(a)
        elif isinstance(g, Atom):
            for a in g.args:
                walk(a)
        elif isinstance(g, BINARY):
            walk(g.left)
            walk(g.right)
        elif isinstance(g, QUANTIFIERS):
            names.add(g.var.name)
            walk(g.body)
        elif isinstance(g, (Sequent, Hypersequent)):
            for h in g.formulas():
                walk(h)

    walk(f)
    return names


def fresh_var(base: Var, avoid: Iterable[Var]) -> Var:
    """`base` itself if unused, else base with the smallest numeric suffix that is."""
    avoid = set(avoid)
    if base not in avoid:
        return base
    stem = base.name.rstrip("0123456789") or base.name
    i = 1
    while Var(f"{stem}{i}", base.scope) in avoid:
        i += 1
    return Var(f"{stem}{i}", base.scope)


# --------------------------------------------------------- substitution

def subst_term(t: Term, x: Var, s: Term) -> Term:
    if isinstance(t, Var):
        return s if t == x else t
    return Fn(t.symbol, tuple(subst_term(a, x, s) for a in t.args))


def substitute(f: Formula, x: Var, t: Term) -> Formula:
    """Capture-avoiding [t/x]f."""
    if isinstance(f, Bot):
        return f
    if isinstance(f, Atom):
        if not f.args:
            return f
        return Atom(f.pred, tuple(subst_term(a, x, t) for a in f.args))
    if isinstance(f, BINARY):
        return type(f)(substitute(f.left, x, t), substitute(f.right, x, t))
    # quantifier
    if f.var == x or x not in free_vars(f.body):
        return f
    tvars = free_vars(t)
    if f.var in tvars:
        y = fresh_var(f.var, tvars | free_vars(f.body) | {x})
        body = substitute(f.body, f.var, y)
        return type(f)(y, substitute(body, x, t))
    return type(f)(f.var, substitute(f.body, x, t))


def substitute_sequent(s: Sequent, x: Var, t: Term) -> Sequent:
    return Sequent(
        tuple(substitute(f, x, t) for f in s.ante),
        tuple(substitute(f, x, t) for f in s.succ),
    )


# ---------------------------------------------------- alpha equivalence

def _nameless_term(t: Term, env: dict):
    if isinstance(t, Var):
        if t in env:
            return ("b", env[t])
        return ("v", t.name, t.scope)
    return ("f", t.symbol, tuple(_nameless_term(a, env) for a in t.args))


def _nameless(f: Formula, env: dict, depth: int):
    if isinstance(f, Bot):
        return ("bot",)
    if isinstance(f, Atom):
        return ("atom", f.pred, tuple(_nameless_term(a, env) for a in f.args))
    if isinstance(f, BINARY):
        return (type(f).__name__, _nameless(f.left, env, depth), _nameless(f.right, env, depth))
    inner = dict(env)
    # binder distance counted from the root; unique per binder on any path
    inner[f.var] = depth
    return (type(f).__name__, _nameless(f.body, inner, depth + 1))


def alpha_key(f: Formula):
    """A hashable key equal for exactly the alpha-equivalent formulas."""
    return _nameless(f, {}, 0)


def alpha_equal(f: Formula, g: Formula) -> bool:
    if f is g or f == g:
        return True
    return alpha_key(f) == alpha_key(g)


def sequent_alpha_equal(s: Sequent, t: Sequent) -> bool:
    return (
        len(s.ante) == len(t.ante)
        and len(s.succ) == len(t.succ)
        and all(alpha_equal(a, b) for a, b in zip(s.ante, t.ante))
        and all(alpha_equal(a, b) for a, b in zip(s.succ, t.succ))
    )


def hyper_alpha_equal(g: Hypersequent, h: Hypersequent) -> bool:
    return len(g) == len(h) and all(sequent_alpha_equal(s, t) for s, t in zip(g, h))


# ------------------------------------------------------------- printing

_PREC = {Imp: 1, Or: 2, And: 3}
_OPS = {Imp: "->", Or: "\\/", And: "&"}


def show(f: Formula, ops: dict = _OPS, atom=str, binder=None) -> str:
    """Print with minimal parentheses; `ops`, `atom` and `binder` choose the notation."""
    if isinstance(f, (Bot, Atom)):
        return atom(f)
    if isinstance(f, QUANTIFIERS):
        if binder is None:
            kw = "forall" if isinstance(f, Forall) else "exists"
            return f"{kw} {f.var}. {show(f.body, ops, atom, binder)}"
        return binder(f) + show(f.body, ops, atom, binder)
    p = _PREC[type(f)]
    left, right = show(f.left, ops, atom, binder), show(f.right, ops, atom, binder)
    if isinstance(f.left, QUANTIFIERS) or (
        isinstance(f.left, BINARY) and _PREC[type(f.left)] < p + (1 if isinstance(f, Imp) else 0)
    ):
        left = f"({left})"
    if isinstance(f.right, QUANTIFIERS) or (
        isinstance(f.right, BINARY) and _PREC[type(f.right)] < p + (0 if isinstance(f, Imp) else 1)
    ):
        right = f"({right})"
    return f"{left} {ops[type(f)]} {right}"


def to_text(f: Formula) -> str:
    return show(f)


def sequent_text(s: Sequent) -> str:
    lhs = ", ".join(map(to_text, s.ante))
    rhs = ", ".join(map(to_text, s.succ))
    return f"{lhs} |- {rhs}".strip()


def hyper_text(h: Hypersequent) -> str:
    return " || ".join(sequent_text(s) for s in h.components)


def size(f: Formula) -> int:
    """Syntax-tree node count, term nodes included."""
    if isinstance(f, Bot):
        return 1
    if isinstance(f, Atom):
        return 1 + sum(_term_size(a) for a in f.args)
    if isinstance(f, BINARY):
        return 1 + size(f.left) + size(f.right)
    return 1 + size(f.body)


def _term_size(t: Term) -> int:
    if isinstance(t, Var):
        return 1
    return 1 + sum(_term_size(a) for a in t.args)


# -------------------------------------------------------------- parsing

class ParseError(ValueError):
    def __init__(self, message: str, pos: int, text: str = ""):
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at position {pos}")


class ArityError(ParseError):
    pass


_TOKEN = re.compile(
    r"\s*(?:(?P<op>\|\||\|-|->|\\/|&|~|\(|\)|,|\.|!)|(?P<id>[A-Za-z][A-Za-z0-9_]*))"
)


def _tokenize(text: str) -> list:
    toks = []
    i = 0
    n = len(text)
    while True:
        while i < n and text[i].isspace():
            i += 1
        if i >= n:
            break
        m = _TOKEN.match(text, i)
        if not m or m.end() == i:
            raise ParseError(f"unexpected character {text[i]!r}", i, text)
        start = m.start("op") if m.group("op") else m.start("id")
        toks.append((m.group("op") or m.group("id"), start))
        i = m.end()
    toks.append(("<eof>", n))
    return toks


class _Parser:
    def __init__(self, text: str, arities: dict | None = None):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        # ("pred"|"fn", name) -> arity
        self.arities = {} if arities is None else arities

    def peek(self) -> str:
        return self.toks[self.i][0]

    def pos(self) -> int:
        return self.toks[self.i][1]

    def take(self, expected: str | None = None) -> str:
        tok, pos = self.toks[self.i]
        if expected is not None and tok != expected:
            raise ParseError(f"expected {expected!r}, found {tok!r}", pos, self.text)
        self.i += 1
        return tok

    def ident(self) -> str:
        tok, pos = self.toks[self.i]
        if not re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", tok) or tok in KEYWORDS:
            raise ParseError(f"expected identifier, found {tok!r}", pos, self.text)
        self.i += 1
        return tok

    def end(self):
        if self.peek() != "<eof>":
            raise ParseError(f"unexpected {self.peek()!r}", self.pos(), self.text)

    def _arity(self, kind: str, name: str, n: int, pos: int):
        known = self.arities.setdefault((kind, name), n)
        if known != n:
            raise ArityError(f"{kind} {name!r} used with arity {n}, previously {known}", pos, self.text)

    # formulas
    def formula(self) -> Formula:
        if self.peek() in ("forall", "exists"):
            return self.quantified()
        left = self.disj()
        if self.peek() == "->":
            self.take()
            return Imp(left, self.formula())
        return left

    def quantified(self) -> Formula:
        kw = self.take()
        var = self.variable()
        self.take(".")
        body = self.formula()
        return Forall(var, body) if kw == "forall" else Exists(var, body)

    def disj(self) -> Formula:
        f = self.conj()
        while self.peek() == "\\/":
            self.take()
            f = Or(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.unary()
        while self.peek() == "&":
            self.take()
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        tok = self.peek()
        if tok == "~":
            self.take()
            return neg(self.unary())
        if tok == "bot":
            self.take()
            return BOT
        if tok == "top":
            self.take()
            return TOP
        if tok == "(":
            self.take()
            f = self.formula()
            self.take(")")
            return f
        if tok in ("forall", "exists"):
            return self.quantified()
        pos = self.pos()
        name = self.ident()
        args = ()
        if self.peek() == "(":
            self.take()
            args = self.term_list()
            self.take(")")
        self._arity("predicate", name, len(args), pos)
        return Atom(name, args)

    def term_list(self) -> tuple:
        if self.peek() == ")":
            return ()
        args = [self.term()]
        while self.peek() == ",":
            self.take()
            args.append(self.term())
        return tuple(args)

    def variable(self) -> Var:
        name = self.ident()
        if self.peek() == "!":
            self.take()
            return Var(name, GLOBAL)
        return Var(name)

    def term(self) -> Term:
        pos = self.pos()
        name = self.ident()
        if self.peek() == "(":
            self.take()
            args = self.term_list()
            self.take(")")
            self._arity("function", name, len(args), pos)
            return Fn(name, args)
        if self.peek() == "!":
            self.take()
            return Var(name, GLOBAL)
        return Var(name)

    # sequents
    def formula_list(self, stop: tuple) -> tuple:
        if self.peek() in stop:
            return ()
        fs = [self.formula()]
        while self.peek() == ",":
            self.take()
            fs.append(self.formula())
        return tuple(fs)

    def sequent(self) -> Sequent:
        ante = self.formula_list(("|-",))
        self.take("|-")
        succ = self.formula_list(("||", "<eof>"))
        return Sequent(ante, succ)

    def hypersequent(self) -> Hypersequent:
        comps = [self.sequent()]
        while self.peek() == "||":
            self.take()
            comps.append(self.sequent())
        return Hypersequent(comps)


def parse_formula(text: str, arities: dict | None = None) -> Formula:
    p = _Parser(text, arities)
    f = p.formula()
    p.end()
    return f


def parse_term(text: str, arities: dict | None = None) -> Term:
    p = _Parser(text, arities)
    t = p.term()
    p.end()
    return t


def parse_sequent(text: str, arities: dict | None = None) -> Sequent:
    p = _Parser(text, arities)
    s = p.sequent()
    p.end()
    return s


def parse_hypersequent(text: str, arities: dict | None = None) -> Hypersequent:
    """Parse ``G1 |- D1 || G2 |- D2 ...``.

    Pass the same ``arities`` dict across calls to enforce consistent symbol
    arities over several inputs.
    """
    p = _Parser(text, arities)
    h = p.hypersequent()
    p.end()
    return h
