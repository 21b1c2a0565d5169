"""Formula syntax: AST nodes, parser, renderer, substitution and matching.

Concrete grammar (lowest precedence first):

    iff   := imp ( "<->" imp )*
    imp   := or ( "->" imp )?            right associative
    or    := and ( "|" and )*            left associative
    and   := unary ( "&" unary )*        left associative
    unary := ( "~" | "F" | "G" | "P" | "H"
             | "dia" | "box" | "bdia" | "bbox" ) unary | atom
    atom  := "top" | "bot" | VAR | "(" formula ")"

``F``/``dia`` is the forward diamond, ``G``/``box`` the forward box,
``P``/``bdia`` the backward diamond, ``H``/``bbox`` the backward box.
Variables match ``[a-z][a-zA-Z0-9_]*`` and must not be reserved words.
Uppercase identifiers are metavariables and are only accepted by
``parse_schema``; they stand for arbitrary formulas in axiom schemas,
rule shapes and lemma citations.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Mapping, Optional


class SyntaxIssue(ValueError):
    """Base class for lexing/parsing problems."""


class LexError(SyntaxIssue):
    def __init__(self, pos: int, char: str):
        super().__init__(f"unexpected character {char!r} at position {pos}")
        self.pos = pos
        self.char = char


class ParseError(SyntaxIssue):
    def __init__(self, pos: int, message: str):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


class ReservedWordError(SyntaxIssue):
    def __init__(self, name: str):
        super().__init__(f"{name!r} is reserved and cannot name a variable")
        self.name = name


# ---------------------------------------------------------------- AST nodes


@dataclass(frozen=True)
class Formula:
    def __str__(self) -> str:
        return render_formula(self)


@dataclass(frozen=True)
class Var(Formula):
    name: str


@dataclass(frozen=True)
class MetaVar(Formula):
    """Schema placeholder; appears only in axiom schemas and rule shapes."""

    name: str


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Bot(Formula):
    pass


@dataclass(frozen=True)
class Not(Formula):
    child: Formula


@dataclass(frozen=True)
class Dia(Formula):
    child: Formula


@dataclass(frozen=True)
class Box(Formula):
    child: Formula


@dataclass(frozen=True)
class BDia(Formula):
    child: Formula


@dataclass(frozen=True)
class BBox(Formula):
    child: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Imp(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula


UNARY_KINDS = (Not, Dia, Box, BDia, BBox)
BINARY_KINDS = (And, Or, Imp, Iff)

RESERVED_WORDS = frozenset({"top", "bot", "dia", "box", "bdia", "bbox"})
_VAR_RE = re.compile(r"[a-z][a-zA-Z0-9_]*\Z")

_UNARY_WORDS = {
    "F": Dia, "dia": Dia,
    "G": Box, "box": Box,
    "P": BDia, "bdia": BDia,
    "H": BBox, "bbox": BBox,
}


def is_valid_var_name(name: str) -> bool:
    return bool(_VAR_RE.match(name)) and name not in RESERVED_WORDS


def check_var_name(name: str) -> str:
    if name in RESERVED_WORDS:
        raise ReservedWordError(name)
    if not _VAR_RE.match(name):
        raise SyntaxIssue(f"invalid variable name {name!r}")
    return name


# ----------------------------------------------------------------- lexing

_IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c in " \t\r\n":
            i += 1
            continue
        if c == "(":
            tokens.append(("LPAREN", c, i))
            i += 1
        elif c == ")":
            tokens.append(("RPAREN", c, i))
            i += 1
        elif c == "&":
            tokens.append(("AND", c, i))
            i += 1
        elif c == "|":
            tokens.append(("OR", c, i))
            i += 1
        elif c == "~":
            tokens.append(("NOT", c, i))
            i += 1
        elif text.startswith("<->", i):
            tokens.append(("IFF", "<->", i))
            i += 3
        elif text.startswith("->", i):
            tokens.append(("IMP", "->", i))
            i += 2
        elif c.isalpha():
            m = _IDENT_RE.match(text, i)
            assert m is not None
            tokens.append(("IDENT", m.group(), i))
            i = m.end()
        else:
            raise LexError(i, c)
    tokens.append(("EOF", "", n))
    return tokens


# ----------------------------------------------------------------- parsing


class _Parser:
    def __init__(self, text: str, allow_meta: bool):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.allow_meta = allow_meta

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def advance(self) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> tuple[str, str, int]:
        tok = self.peek()
        if tok[0] != kind:
            raise ParseError(tok[2], f"expected {kind}, found {tok[1]!r}")
        return self.advance()

    def parse(self) -> Formula:
        f = self.iff()
        tok = self.peek()
        if tok[0] != "EOF":
            raise ParseError(tok[2], f"unexpected trailing input {tok[1]!r}")
        return f

    def iff(self) -> Formula:
        f = self.imp()
        while self.peek()[0] == "IFF":
            self.advance()
            f = Iff(f, self.imp())
        return f

    def imp(self) -> Formula:
        f = self.disj()
        if self.peek()[0] == "IMP":
            self.advance()
            return Imp(f, self.imp())
        return f

    def disj(self) -> Formula:
        f = self.conj()
        while self.peek()[0] == "OR":
            self.advance()
            f = Or(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.unary()
        while self.peek()[0] == "AND":
            self.advance()
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        kind, value, pos = self.peek()
        if kind == "NOT":
            self.advance()
            return Not(self.unary())
        if kind == "IDENT" and value in _UNARY_WORDS:
            self.advance()
            return _UNARY_WORDS[value](self.unary())
        return self.atom()

    def atom(self) -> Formula:
        kind, value, pos = self.advance()
        if kind == "LPAREN":
            f = self.iff()
            self.expect("RPAREN")
            return f
        if kind == "IDENT":
            if value == "top":
                return Top()
            if value == "bot":
                return Bot()
            if value[0].islower():
                return Var(value)
            if self.allow_meta:
                return MetaVar(value)
            raise ParseError(
                pos, f"uppercase identifier {value!r} (metavariable) not allowed"
            )
        raise ParseError(pos, f"expected a formula, found {value or 'end of input'!r}")


def parse_formula(text: str) -> Formula:
    """Parse concrete syntax into a Formula; rejects metavariables."""
    return _Parser(text, allow_meta=False).parse()


def parse_schema(text: str) -> Formula:
    """Parse a schema: uppercase identifiers become MetaVar nodes."""
    return _Parser(text, allow_meta=True).parse()


# --------------------------------------------------------------- rendering

_PREC_IFF, _PREC_IMP, _PREC_OR, _PREC_AND, _PREC_UNARY, _PREC_ATOM = range(6)

_UNARY_TOKEN = {Dia: "F ", Box: "G ", BDia: "P ", BBox: "H ", Not: "~"}


def _prec(f: Formula) -> int:
    if isinstance(f, Iff):
        return _PREC_IFF
    if isinstance(f, Imp):
        return _PREC_IMP
    if isinstance(f, Or):
        return _PREC_OR
    if isinstance(f, And):
        return _PREC_AND
    if isinstance(f, UNARY_KINDS):
        return _PREC_UNARY
    return _PREC_ATOM


def render_formula(f: Formula) -> str:
    """Render with the fewest parentheses that re-parse to the same tree."""

    def wrap(child: Formula, minimum: int) -> str:
        text = render_formula(child)
        if _prec(child) < minimum:
            return f"({text})"
        return text

    if isinstance(f, (Var, MetaVar)):
        return f.name
    if isinstance(f, Top):
        return "top"
    if isinstance(f, Bot):
        return "bot"
    if isinstance(f, UNARY_KINDS):
        return _UNARY_TOKEN[type(f)] + wrap(f.child, _PREC_UNARY)
    if isinstance(f, And):
        # left-associative: a right child at the same level needs parens
        return f"{wrap(f.left, _PREC_AND)} & {wrap(f.right, _PREC_AND + 1)}"
    if isinstance(f, Or):
        return f"{wrap(f.left, _PREC_OR)} | {wrap(f.right, _PREC_OR + 1)}"
    if isinstance(f, Imp):
        # right-associative
        return f"{wrap(f.left, _PREC_IMP + 1)} -> {wrap(f.right, _PREC_IMP)}"
    if isinstance(f, Iff):
        return f"{wrap(f.left, _PREC_IFF)} <-> {wrap(f.right, _PREC_IFF + 1)}"
    raise TypeError(f"not a formula: {f!r}")


# ------------------------------------------------------------- traversals


def iter_subformulas(f: Formula) -> Iterator[Formula]:
    """Preorder walk over all subformula occurrences."""
    yield f
    if isinstance(f, UNARY_KINDS):
        yield from iter_subformulas(f.child)
    elif isinstance(f, BINARY_KINDS):
        yield from iter_subformulas(f.left)
        yield from iter_subformulas(f.right)


def variables_of(f: Formula) -> tuple[str, ...]:
    """Sorted names of the propositional variables occurring in f."""
    return tuple(sorted({g.name for g in iter_subformulas(f) if isinstance(g, Var)}))


def metavariables_of(f: Formula) -> tuple[str, ...]:
    return tuple(
        sorted({g.name for g in iter_subformulas(f) if isinstance(g, MetaVar)})
    )


def has_modal(f: Formula) -> bool:
    return any(isinstance(g, (Dia, Box, BDia, BBox)) for g in iter_subformulas(f))


def substitute(f: Formula, mapping: Mapping[str, Formula]) -> Formula:
    """Replace metavariables by formulas; names not in mapping stay put."""
    if isinstance(f, MetaVar):
        return mapping.get(f.name, f)
    if isinstance(f, UNARY_KINDS):
        return type(f)(substitute(f.child, mapping))
    if isinstance(f, BINARY_KINDS):
        return type(f)(substitute(f.left, mapping), substitute(f.right, mapping))
    return f


def match(
    pattern: Formula,
    target: Formula,
    bindings: Optional[dict[str, Formula]] = None,
) -> Optional[dict[str, Formula]]:
    """One-sided matching: bind pattern metavariables to target subformulas.

    Returns the (possibly extended) bindings, or None when the shapes are
    incompatible.  Metavariables occurring in the target are treated as
    opaque atoms, which is what rule checking over schemas requires.
    """
    if bindings is None:
        bindings = {}
    if isinstance(pattern, MetaVar):
        seen = bindings.get(pattern.name)
        if seen is None:
            bindings[pattern.name] = target
            return bindings
        return bindings if seen == target else None
    if type(pattern) is not type(target):
        return None
    if isinstance(pattern, UNARY_KINDS):
        return match(pattern.child, target.child, bindings)
    if isinstance(pattern, BINARY_KINDS):
        b = match(pattern.left, target.left, bindings)
        if b is None:
            return None
        return match(pattern.right, target.right, b)
    return bindings if pattern == target else None
