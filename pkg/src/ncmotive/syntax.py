"""Tokenizer, recursive-descent parser and printer for the ``ncmotive`` input language.

A program is a list of statements separated by ``;`` or newlines::

    field local
    A = csa(class=1/6, deg=6)
    iso U(A) (+) U(k)^1 , U(csa(class=1/2, deg=2)) (+) U(csa(class=2/3, deg=3))

The first statement fixes the field model, then come any number of
bindings, then exactly one query.  Class literals depend on the model:

========  ==========================================
trivial   ``0``
real      ``0`` or ``1/2``
local     ``a/b``
global    ``a/b@p + c/d@inf + ...`` (or ``0``)
abstract  ``(r1,r2,...)``
========  ==========================================

Parsing only checks syntax.  Numbers are kept as written and are checked
against the model by :func:`ncmotive.cli.run`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional, Union

from .brauer import GLOBAL, INF, LOCAL, REAL, TRIVIAL, AbstractAbelian, FieldModel
from .errors import ParseError, ValidationError

__all__ = [
    "Token",
    "tokenize",
    "RationalLit",
    "GlobalLit",
    "VectorLit",
    "AlgebraSpec",
    "NameRef",
    "UTerm",
    "UnitTerm",
    "SodTerm",
    "MotiveExpr",
    "InfoQuery",
    "DecomposeQuery",
    "IsoQuery",
    "BsCheckQuery",
    "Binding",
    "Program",
    "COMMANDS",
    "parse_program",
    "parse_field",
    "format_field",
    "format_class_lit",
    "format_ref",
    "format_motive",
    "format_query",
    "format_program",
]

COMMANDS = ("info", "decompose", "iso", "bs-check")
_CONTINUATION = frozenset({",", "(+)", "+", "=", "/", "@", "^"})
RESERVED = frozenset(COMMANDS) | {"field", "csa", "U", "k", "sod", "inf"}

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<comment>\#[^\n]*)
  | (?P<newline>\n)
  | (?P<int>\d+)
  | (?P<ident>bs-check\b|[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>\(\+\)|[()/@,=;+^])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "ident", "op", "sep", "eof"
    text: str
    line: int
    col: int

    def describe(self) -> str:
        if self.kind == "eof":
            return "end of input"
        if self.kind == "sep" and self.text == "\n":
            return "newline"
        return repr(self.text)


def tokenize(text: str) -> list[Token]:
    """Split ``text`` into tokens.

    Newlines act as statement separators except inside parentheses or right
    after a binary operator, so long expressions may be wrapped.
    """
    tokens: list[Token] = []
    pos = 0
    line, line_start = 1, 0
    depth = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise ParseError(line, col, "a token", repr(text[pos]))
        kind = m.lastgroup
        tok = m.group()
        if kind == "newline":
            continued = tokens and tokens[-1].kind == "op" and tokens[-1].text in _CONTINUATION
            if depth == 0 and not continued:
                tokens.append(Token("sep", "\n", line, col))
            line += 1
            line_start = m.end()
        elif kind == "op":
            if tok == "(":
                depth += 1
            elif tok == ")":
                depth = max(depth - 1, 0)
            tokens.append(Token("sep" if tok == ";" else "op", tok, line, col))
        elif kind in ("int", "ident"):
            tokens.append(Token(kind, tok, line, col))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


# --- AST ---------------------------------------------------------------------


@dataclass(frozen=True)
class RationalLit:
    num: int
    den: int = 1
    line: int = field(default=0, compare=False, repr=False)
    col: int = field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class GlobalLit:
    # ((invariant, place), ...); place is an int or INF
    terms: tuple[tuple[RationalLit, Union[int, str]], ...] = ()
    line: int = field(default=0, compare=False, repr=False)
    col: int = field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class VectorLit:
    residues: tuple[int, ...]
    line: int = field(default=0, compare=False, repr=False)
    col: int = field(default=0, compare=False, repr=False)


ClassLit = Union[RationalLit, GlobalLit, VectorLit]


@dataclass(frozen=True)
class AlgebraSpec:
    cls: ClassLit
    degree: int
    name: Optional[str] = None
    line: int = field(default=0, compare=False, repr=False)
    col: int = field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class NameRef:
    name: str
    line: int = field(default=0, compare=False, repr=False)
    col: int = field(default=0, compare=False, repr=False)


AlgebraRef = Union[AlgebraSpec, NameRef]


@dataclass(frozen=True)
class UTerm:
    ref: AlgebraRef


@dataclass(frozen=True)
class UnitTerm:
    count: int


@dataclass(frozen=True)
class SodTerm:
    ref: AlgebraRef


Term = Union[UTerm, UnitTerm, SodTerm]


@dataclass(frozen=True)
class MotiveExpr:
    terms: tuple[Term, ...]


@dataclass(frozen=True)
class InfoQuery:
    ref: AlgebraRef
    command = "info"


@dataclass(frozen=True)
class DecomposeQuery:
    cls: ClassLit
    command = "decompose"


@dataclass(frozen=True)
class IsoQuery:
    left: MotiveExpr
    right: MotiveExpr
    command = "iso"


@dataclass(frozen=True)
class BsCheckQuery:
    ref: AlgebraRef
    command = "bs-check"


Query = Union[InfoQuery, DecomposeQuery, IsoQuery, BsCheckQuery]


@dataclass(frozen=True)
class Binding:
    name: str
    spec: AlgebraSpec
    line: int = field(default=0, compare=False, repr=False)
    col: int = field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class Program:
    field: FieldModel
    bindings: tuple[Binding, ...]
    query: Query


# --- parser ------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str, command: Optional[str] = None):
        self.tokens = tokenize(text)
        self.i = 0
        self.command = command
        self.model: FieldModel = LOCAL

    # token helpers

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def at(self, text: str) -> bool:
        return self.tok.kind in ("op", "ident") and self.tok.text == text

    def fail(self, expected: str):
        raise ParseError(self.tok.line, self.tok.col, expected, self.tok.describe())

    def advance(self) -> Token:
        tok = self.tok
        self.i += 1
        return tok

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.fail(repr(text))
        return self.advance()

    def expect_int(self) -> int:
        if self.tok.kind != "int":
            self.fail("an integer")
        return int(self.advance().text)

    def expect_ident(self) -> Token:
        if self.tok.kind != "ident" or self.tok.text in RESERVED:
            self.fail("a name")
        return self.advance()

    def skip_seps(self) -> bool:
        seen = False
        while self.tok.kind == "sep":
            self.advance()
            seen = True
        return seen

    # grammar

    def program(self) -> Program:
        self.skip_seps()
        self.expect("field")
        self.model = self.field_spec()
        bindings: list[Binding] = []
        names: set[str] = set()
        query: Optional[Query] = None
        while True:
            if self.tok.kind == "eof":
                break
            if not self.skip_seps():
                self.fail("';' or newline")
            if self.tok.kind == "eof":
                break
            if query is not None:
                self.fail("end of input after the query")
            if self.tok.kind == "ident" and self.peek().text == "=" and self.peek().kind == "op":
                b = self.binding()
                if b.name in names:
                    raise ValidationError(f"name {b.name!r} bound twice", b.line, b.col)
                names.add(b.name)
                bindings.append(b)
            else:
                query = self.query()
        if query is None:
            self.fail("a query (" + ", ".join(COMMANDS) + ")")
        return Program(self.model, tuple(bindings), query)

    def field_spec(self) -> FieldModel:
        tok = self.tok
        simple = {"trivial": TRIVIAL, "real": REAL, "local": LOCAL, "global": GLOBAL}
        if tok.kind == "ident" and tok.text in simple:
            self.advance()
            return simple[tok.text]
        if not self.at("abstract"):
            self.fail("a field model (trivial, real, local, global, abstract)")
        self.advance()
        orders = [self.expect_int()]
        while self.at(","):
            self.advance()
            orders.append(self.expect_int())
        try:
            return AbstractAbelian(tuple(orders))
        except ValueError as exc:
            raise ValidationError(str(exc), tok.line, tok.col) from None

    def binding(self) -> Binding:
        name = self.expect_ident()
        self.expect("=")
        spec = self.algebra_spec()
        return Binding(name.text, spec, name.line, name.col)

    def query(self) -> Query:
        tok = self.tok
        if tok.kind == "ident" and tok.text in COMMANDS:
            command = self.advance().text
            if self.command is not None and command != self.command:
                raise ValidationError(
                    f"query is {command!r} but the subcommand is {self.command!r}", tok.line, tok.col
                )
        elif self.command is not None:
            command = self.command
        else:
            self.fail("a query (" + ", ".join(COMMANDS) + ")")
        if command == "info":
            return InfoQuery(self.algebra_ref())
        if command == "decompose":
            return DecomposeQuery(self.class_lit())
        if command == "iso":
            left = self.motive()
            self.expect(",")
            return IsoQuery(left, self.motive())
        return BsCheckQuery(self.algebra_ref())

    def algebra_ref(self) -> AlgebraRef:
        if self.at("csa"):
            return self.algebra_spec()
        tok = self.tok
        if tok.kind != "ident" or tok.text in RESERVED:
            self.fail("'csa(...)' or a bound name")
        self.advance()
        return NameRef(tok.text, tok.line, tok.col)

    def algebra_spec(self) -> AlgebraSpec:
        start = self.expect("csa")
        self.expect("(")
        args: dict[str, object] = {}
        while True:
            key = self.tok
            if key.kind != "ident" or key.text not in ("class", "deg", "name"):
                self.fail("'class', 'deg' or 'name'")
            if key.text in args:
                raise ParseError(key.line, key.col, "each of class/deg/name at most once", repr(key.text))
            self.advance()
            self.expect("=")
            if key.text == "class":
                args["class"] = self.class_lit()
            elif key.text == "deg":
                args["deg"] = self.expect_int()
            else:
                args["name"] = self.expect_ident().text
            if self.at(","):
                self.advance()
                continue
            break
        for required in ("class", "deg"):
            if required not in args:
                self.fail(f"'{required}=' argument")
        self.expect(")")
        return AlgebraSpec(args["class"], args["deg"], args.get("name"), start.line, start.col)

    def rational(self) -> RationalLit:
        tok = self.tok
        num = self.expect_int()
        den = 1
        if self.at("/"):
            self.advance()
            den = self.expect_int()
        return RationalLit(num, den, tok.line, tok.col)

    def class_lit(self) -> ClassLit:
        tok = self.tok
        if isinstance(self.model, AbstractAbelian):
            self.expect("(")
            residues = [self.expect_int()]
            while self.at(","):
                self.advance()
                residues.append(self.expect_int())
            self.expect(")")
            return VectorLit(tuple(residues), tok.line, tok.col)
        if self.model == GLOBAL:
            if tok.kind == "int" and tok.text.strip("0") == "" and self.peek().text not in ("/", "@"):
                self.advance()
                return GlobalLit((), tok.line, tok.col)
            terms = [self.global_term()]
            while self.at("+"):
                self.advance()
                terms.append(self.global_term())
            return GlobalLit(tuple(terms), tok.line, tok.col)
        return self.rational()

    def global_term(self) -> tuple[RationalLit, Union[int, str]]:
        inv = self.rational()
        self.expect("@")
        if self.at("inf"):
            self.advance()
            return inv, INF
        return inv, self.expect_int()

    def motive(self) -> MotiveExpr:
        terms = [self.term()]
        while self.at("(+)"):
            self.advance()
            terms.append(self.term())
        return MotiveExpr(tuple(terms))

    def term(self) -> Term:
        if self.at("sod"):
            self.advance()
            self.expect("(")
            ref = self.algebra_ref()
            self.expect(")")
            return SodTerm(ref)
        if not self.at("U"):
            self.fail("'U(' or 'sod('")
        self.advance()
        self.expect("(")
        if self.at("k"):
            self.advance()
            self.expect(")")
            count = 1
            if self.at("^"):
                self.advance()
                count = self.expect_int()
            return UnitTerm(count)
        ref = self.algebra_ref()
        self.expect(")")
        return UTerm(ref)


def parse_program(text: str, command: Optional[str] = None) -> Program:
    """Parse a full program.

    If ``command`` is given, the query keyword may be omitted (the final
    statement is then parsed as that command's argument); if present it must
    match.
    """
    if command is not None and command not in COMMANDS:
        raise ValueError(f"unknown command {command!r}")
    return _Parser(text, command).program()


def parse_field(text: str) -> FieldModel:
    p = _Parser(text)
    model = p.field_spec()
    if p.tok.kind != "eof":
        p.fail("end of input")
    return model


# --- printer -----------------------------------------------------------------


def format_field(model: FieldModel) -> str:
    return str(model)


def _format_rational(r: RationalLit) -> str:
    return str(r.num) if r.den == 1 else f"{r.num}/{r.den}"


def format_class_lit(lit: ClassLit) -> str:
    if isinstance(lit, VectorLit):
        return "(" + ",".join(map(str, lit.residues)) + ")"
    if isinstance(lit, GlobalLit):
        if not lit.terms:
            return "0"
        return " + ".join(f"{_format_rational(inv)}@{place}" for inv, place in lit.terms)
    return _format_rational(lit)


def format_algebra(spec: AlgebraSpec) -> str:
    name = f", name={spec.name}" if spec.name else ""
    return f"csa(class={format_class_lit(spec.cls)}, deg={spec.degree}{name})"


def format_ref(ref: AlgebraRef) -> str:
    if isinstance(ref, NameRef):
        return ref.name
    return format_algebra(ref)


def _format_term(term: Term) -> str:
    if isinstance(term, UnitTerm):
        return f"U(k)^{term.count}"
    if isinstance(term, SodTerm):
        return f"sod({format_ref(term.ref)})"
    return f"U({format_ref(term.ref)})"


def format_motive(expr: MotiveExpr) -> str:
    return " (+) ".join(_format_term(t) for t in expr.terms)


def format_query(query: Query) -> str:
    if isinstance(query, DecomposeQuery):
        return f"decompose {format_class_lit(query.cls)}"
    if isinstance(query, IsoQuery):
        return f"iso {format_motive(query.left)} , {format_motive(query.right)}"
    return f"{query.command} {format_ref(query.ref)}"


def format_program(program: Program) -> str:
    parts = [f"field {format_field(program.field)}"]
    parts += [f"{b.name} = {format_algebra(b.spec)}" for b in program.bindings]
    parts.append(format_query(program.query))
    return "; ".join(parts)
