"""Formula AST, parser, printer and syntactic measures.

The supported language covers plain modal logic ML plus three extensions:
intuitionistic disjunction ``\\/``, and dependence atoms ``dep(...)`` whose
members are ML formulas.  Negation exists only on proposition symbols, so
every formula is in negation normal form by construction.

ASCII grammar (loosest binding first, all binary connectives right
associative, whitespace insignificant)::

    formula := or_part  [ '\\/' formula ]        intuitionistic disjunction
    or_part := and_part [ '|' or_part ]          splitting disjunction
    and_part:= unary    [ '&' and_part ]
    unary   := '~' PROP | '<>' unary | '[]' unary | atom
    atom    := 'T' | 'F' | PROP
             | 'dep' '(' [formula {',' formula}] ';' formula ')'
             | '(' formula ')'

Proposition symbols match ``[a-z][a-zA-Z0-9_]*``; ``dep`` is reserved.
The dependence atom writes its target after a semicolon; ``dep(; g)`` with
no members before the semicolon states that ``g`` has a constant truth
value.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterator


class ParseError(ValueError):
    """Malformed formula text; `position` is a 0-based offset into the input."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class FragmentError(ValueError):
    """A formula lies outside the fragment an operation requires."""


_PROP_NAME = re.compile(r"[a-z][a-zA-Z0-9_]*\Z")
_RESERVED = frozenset({"dep"})


def _check_prop_name(name: str) -> None:
    if not _PROP_NAME.match(name) or name in _RESERVED:
        raise ValueError(f"invalid proposition name {name!r}")


@dataclass(frozen=True)
class Formula:
    """Base class for all nodes; instances are immutable and hashable."""

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True)
class Top(Formula):
    """Truth constant; holds in every team."""


@dataclass(frozen=True)
class Bot(Formula):
    """Falsity constant; holds exactly in the empty team."""


@dataclass(frozen=True)
class Prop(Formula):
    name: str

    def __post_init__(self):
        _check_prop_name(self.name)


@dataclass(frozen=True)
class NegProp(Formula):
    name: str

    def __post_init__(self):
        _check_prop_name(self.name)


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    """Splitting disjunction: the team divides into a part for each side."""

    left: Formula
    right: Formula


@dataclass(frozen=True)
class IDis(Formula):
    """Intuitionistic disjunction: the whole team satisfies one side."""

    left: Formula
    right: Formula


@dataclass(frozen=True)
class Dia(Formula):
    inner: Formula


@dataclass(frozen=True)
class Box(Formula):
    inner: Formula


@dataclass(frozen=True)
class Dep(Formula):
    """Dependence atom: the members' truth values determine the target's.

    Members and target must be plain ML formulas; `args` may be empty, in
    which case the atom states that the target is constant on the team.
    """

    args: tuple[Formula, ...]
    target: Formula

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))
        for member in (*self.args, self.target):
            if contains_idis(member) or contains_dep(member):
                raise FragmentError(
                    "dep members must be ML formulas (no \\/ and no nested dep)"
                )


class Fragment(Enum):
    """Least logic containing a formula; `value` is the display name."""

    ML = "ML"
    MLIDIS = "ML(\\/)"
    MDL = "MDL"
    EMDL = "EMDL"


def subformulas(f: Formula) -> Iterator[Formula]:
    """Yield `f` and every node below it, parents first."""
    yield f
    if isinstance(f, (And, Or, IDis)):
        yield from subformulas(f.left)
        yield from subformulas(f.right)
    elif isinstance(f, (Dia, Box)):
        yield from subformulas(f.inner)
    elif isinstance(f, Dep):
        for a in f.args:
            yield from subformulas(a)
        yield from subformulas(f.target)


def contains_idis(f: Formula) -> bool:
    return any(isinstance(g, IDis) for g in subformulas(f))


def contains_dep(f: Formula) -> bool:
    return any(isinstance(g, Dep) for g in subformulas(f))


def propositions(f: Formula) -> frozenset[str]:
    """All proposition symbols occurring in `f`."""
    return frozenset(
        g.name for g in subformulas(f) if isinstance(g, (Prop, NegProp))
    )


def modal_depth(f: Formula) -> int:
    """Deepest modality nesting; dep atoms take the max over their members."""
    if isinstance(f, (Top, Bot, Prop, NegProp)):
        return 0
    if isinstance(f, (And, Or, IDis)):
        return max(modal_depth(f.left), modal_depth(f.right))
    if isinstance(f, (Dia, Box)):
        return modal_depth(f.inner) + 1
    if isinstance(f, Dep):
        return max(modal_depth(m) for m in (*f.args, f.target))
    raise TypeError(f"not a formula: {f!r}")


def idis_count(f: Formula) -> int:
    """Number of intuitionistic disjunctions in `f`."""
    return sum(1 for g in subformulas(f) if isinstance(g, IDis))


def symbol_size(f: Formula) -> int:
    """Node count: every literal, constant, connective, modality and dep
    header is one symbol."""
    return sum(1 for _ in subformulas(f))


def classify(f: Formula) -> Fragment:
    """Least fragment containing `f`.

    Formulas mixing ``\\/`` with dependence atoms belong to none of the four
    logics and are rejected.
    """
    has_idis = contains_idis(f)
    has_dep = contains_dep(f)
    if has_idis and has_dep:
        raise FragmentError("formula mixes \\/ and dep(...); no supported fragment contains it")
    if has_dep:
        plain = all(
            isinstance(m, (Prop, NegProp))
            for g in subformulas(f)
            if isinstance(g, Dep)
            for m in (*g.args, g.target)
        )
        return Fragment.MDL if plain else Fragment.EMDL
    if has_idis:
        return Fragment.MLIDIS
    return Fragment.ML


def negate(f: Formula) -> Formula:
    """De Morgan dual of an ML formula, with negations pushed to the atoms.

    Pointwise, the result is true exactly where `f` is false.
    """
    if isinstance(f, Top):
        return Bot()
    if isinstance(f, Bot):
        return Top()
    if isinstance(f, Prop):
        return NegProp(f.name)
    if isinstance(f, NegProp):
        return Prop(f.name)
    if isinstance(f, And):
        return Or(negate(f.left), negate(f.right))
    if isinstance(f, Or):
        return And(negate(f.left), negate(f.right))
    if isinstance(f, Dia):
        return Box(negate(f.inner))
    if isinstance(f, Box):
        return Dia(negate(f.inner))
    raise FragmentError(f"cannot negate non-ML formula {f!s}")


def conjoin(parts) -> Formula:
    """Right-nested conjunction of `parts`; empty input gives T."""
    items = list(parts)
    if not items:
        return Top()
    out = items[-1]
    for item in reversed(items[:-1]):
        out = And(item, out)
    return out


def disjoin(parts) -> Formula:
    """Right-nested splitting disjunction of `parts`; empty input gives F."""
    items = list(parts)
    if not items:
        return Bot()
    out = items[-1]
    for item in reversed(items[:-1]):
        out = Or(item, out)
    return out


def idis_join(parts) -> Formula:
    """Right-nested intuitionistic disjunction; at least one part required."""
    items = list(parts)
    if not items:
        raise ValueError("\\/ needs at least one disjunct")
    out = items[-1]
    for item in reversed(items[:-1]):
        out = IDis(item, out)
    return out


# --- parsing ---------------------------------------------------------------

_TOKEN = re.compile(
    r"""
      (?P<idis>\\/)
    | (?P<dia><>)
    | (?P<box>\[\])
    | (?P<and>&)
    | (?P<or>\|)
    | (?P<not>~)
    | (?P<lparen>\()
    | (?P<rparen>\))
    | (?P<comma>,)
    | (?P<semi>;)
    | (?P<top>T)
    | (?P<bot>F)
    | (?P<ident>[a-z][a-zA-Z0-9_]*)
    """,
    re.VERBOSE,
)


class _Token:
    __slots__ = ("kind", "text", "pos")

    def __init__(self, kind, text, pos):
        self.kind = kind
        self.text = text
        self.pos = pos


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        tokens.append(_Token(m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(_Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def take(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.take()
        if tok.kind != kind:
            raise ParseError(f"expected {what}", tok.pos)
        return tok

    def formula(self) -> Formula:
        left = self.or_part()
        if self.peek().kind == "idis":
            self.take()
            return IDis(left, self.formula())
        return left

    def or_part(self) -> Formula:
        left = self.and_part()
        if self.peek().kind == "or":
            self.take()
            return Or(left, self.or_part())
        return left

    def and_part(self) -> Formula:
        left = self.unary()
        if self.peek().kind == "and":
            self.take()
            return And(left, self.and_part())
        return left

    def unary(self) -> Formula:
        tok = self.peek()
        if tok.kind == "not":
            self.take()
            nxt = self.peek()
            if nxt.kind != "ident" or nxt.text in _RESERVED:
                raise ParseError("~ applies only to proposition symbols", nxt.pos)
            self.take()
            return NegProp(nxt.text)
        if tok.kind == "dia":
            self.take()
            return Dia(self.unary())
        if tok.kind == "box":
            self.take()
            return Box(self.unary())
        return self.atom()

    def atom(self) -> Formula:
        tok = self.take()
        if tok.kind == "top":
            return Top()
        if tok.kind == "bot":
            return Bot()
        if tok.kind == "ident":
            if tok.text == "dep":
                return self.dep_atom()
            return Prop(tok.text)
        if tok.kind == "lparen":
            f = self.formula()
            self.expect("rparen", "')'")
            return f
        raise ParseError(f"expected a formula, found {tok.text!r}" if tok.text else "unexpected end of input", tok.pos)

    def dep_atom(self) -> Formula:
        self.expect("lparen", "'(' after dep")
        args = []
        if self.peek().kind != "semi":
            while True:
                args.append(self.member())
                if self.peek().kind != "comma":
                    break
                self.take()
        self.expect("semi", "';' before the dep target")
        target = self.member()
        self.expect("rparen", "')'")
        return Dep(tuple(args), target)

    def member(self) -> Formula:
        pos = self.peek().pos
        f = self.formula()
        if contains_idis(f) or contains_dep(f):
            raise ParseError("dep members must be ML formulas (no \\/ and no nested dep)", pos)
        return f


def parse(text: str) -> Formula:
    """Parse `text` into a Formula; raises ParseError with a position."""
    parser = _Parser(text)
    f = parser.formula()
    tok = parser.peek()
    if tok.kind != "end":
        raise ParseError(f"unexpected {tok.text!r} after formula", tok.pos)
    return f


# --- printing --------------------------------------------------------------

_LEVEL_IDIS, _LEVEL_OR, _LEVEL_AND, _LEVEL_PREFIX, _LEVEL_ATOM = 1, 2, 3, 4, 5


def _level(f: Formula) -> int:
    if isinstance(f, IDis):
        return _LEVEL_IDIS
    if isinstance(f, Or):
        return _LEVEL_OR
    if isinstance(f, And):
        return _LEVEL_AND
    if isinstance(f, (Dia, Box)):
        return _LEVEL_PREFIX
    return _LEVEL_ATOM


def _render(f: Formula, required: int) -> str:
    if isinstance(f, Top):
        s = "T"
    elif isinstance(f, Bot):
        s = "F"
    elif isinstance(f, Prop):
        s = f.name
    elif isinstance(f, NegProp):
        s = "~" + f.name
    elif isinstance(f, Dia):
        s = "<>" + _render(f.inner, _LEVEL_PREFIX)
    elif isinstance(f, Box):
        s = "[]" + _render(f.inner, _LEVEL_PREFIX)
    elif isinstance(f, And):
        s = _render(f.left, _LEVEL_AND + 1) + " & " + _render(f.right, _LEVEL_AND)
    elif isinstance(f, Or):
        s = _render(f.left, _LEVEL_OR + 1) + " | " + _render(f.right, _LEVEL_OR)
    elif isinstance(f, IDis):
        s = _render(f.left, _LEVEL_IDIS + 1) + " \\/ " + _render(f.right, _LEVEL_IDIS)
    elif isinstance(f, Dep):
        s = (
            "dep("
            + ", ".join(_render(a, 0) for a in f.args)
            + "; "
            + _render(f.target, 0)
            + ")"
        )
    else:
        raise TypeError(f"not a formula: {f!r}")
    if _level(f) < required:
        return "(" + s + ")"
    return s


def render(f: Formula) -> str:
    """Print `f` in the ASCII grammar with only the parentheses precedence
    demands; `parse(render(f)) == f`."""
    return _render(f, 0)
