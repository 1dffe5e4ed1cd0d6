"""A small text language for morphisms of D_{zeta,n}.

Grammar::

    expr    := scaled { ";" scaled }        vertical stacking, left operand on top
    scaled  := [ scalar "*" ] tens
    tens    := atom { "#" atom }            horizontal concatenation
    atom    := "id(" nat ")" | "f" | "g" | "(" expr ")"
    scalar  := rational [ "z^" int ] | "z^" int

``f`` is the n-legged cap, ``g`` the cup and ``z`` the primitive root theta.
``#`` binds tighter than ``;`` and both associate to the left.

>>> parse("id(1) # f ; id(1)")
Compose(top=Tensor(left=Id(k=1), right=Cap()), bottom=Id(k=1))
>>> parse("z^-1 * (g ; f)")
Scale(scalar=ScalarLit(coeff=Fraction(1, 1), exp=-1), expr=Compose(top=Cup(), bottom=Cap()))
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .cocycle import CocycleSpec
from .cyclotomic import CycScalar, RootPower
from .diagram import (
    CAP,
    CUP,
    STRAND,
    CompositionError,
    DiagramWord,
    NormalForm,
    WordTooLarge,
    compose,
    max_atoms_default,
    tensor,
)

__all__ = [
    "DSLSyntaxError",
    "ElaborationError",
    "Id",
    "Cap",
    "Cup",
    "Tensor",
    "Compose",
    "Scale",
    "ScalarLit",
    "parse",
    "elaborate",
    "print_word",
    "unparse",
    "ast_to_json",
]


class DSLSyntaxError(ValueError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.msg, self.line, self.col = msg, line, col


class ElaborationError(ValueError):
    def __init__(self, msg: str, line: int, col: int, source: str = ""):
        where = f" in `{source}`" if source else ""
        super().__init__(f"line {line}, column {col}: {msg}{where}")
        self.msg, self.line, self.col, self.source = msg, line, col, source


# -- AST -------------------------------------------------------------------------
# Positions are (line, column), 1-based, and do not take part in equality.


@dataclass(frozen=True)
class Id:
    k: int
    pos: tuple = field(default=(1, 1), compare=False, repr=False)


@dataclass(frozen=True)
class Cap:
    pos: tuple = field(default=(1, 1), compare=False, repr=False)


@dataclass(frozen=True)
class Cup:
    pos: tuple = field(default=(1, 1), compare=False, repr=False)


@dataclass(frozen=True)
class Tensor:
    left: object
    right: object
    pos: tuple = field(default=(1, 1), compare=False, repr=False)


@dataclass(frozen=True)
class Compose:
    top: object
    bottom: object
    pos: tuple = field(default=(1, 1), compare=False, repr=False)


@dataclass(frozen=True)
class ScalarLit:
    coeff: Fraction
    exp: int


@dataclass(frozen=True)
class Scale:
    scalar: ScalarLit
    expr: object
    pos: tuple = field(default=(1, 1), compare=False, repr=False)


# -- lexer -----------------------------------------------------------------------

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<num>\d+)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<sym>[()#;*^/\-])
    """,
    re.VERBOSE,
)


@dataclass
class _Tok:
    kind: str  # "num", "name", "sym", "eof"
    text: str
    line: int
    col: int


def _tokenize(src: str) -> list[_Tok]:
    toks = []
    i, line, col = 0, 1, 1
    while i < len(src):
        m = _TOKEN.match(src, i)
        if not m:
            raise DSLSyntaxError(f"unexpected character {src[i]!r}", line, col)
        text = m.group()
        if m.lastgroup != "ws":
            if m.lastgroup == "name" and text not in ("id", "f", "g", "z"):
                raise DSLSyntaxError(f"unknown token {text!r}", line, col)
            toks.append(_Tok(m.lastgroup, text, line, col))
        for ch in text:
            if ch == "\n":
                line, col = line + 1, 1
            else:
                col += 1
        i = m.end()
    toks.append(_Tok("eof", "", line, col))
    return toks


# -- parser ----------------------------------------------------------------------


class _Parser:
    def __init__(self, src: str):
        self.toks = _tokenize(src)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def error(self, msg: str, tok: _Tok | None = None):
        tok = tok or self.tok
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise DSLSyntaxError(f"{msg}, found {found}", tok.line, tok.col)

    def at(self, text: str) -> bool:
        return self.tok.kind in ("sym", "name") and self.tok.text == text

    def expect(self, text: str) -> _Tok:
        if not self.at(text):
            self.error(f"expected {text!r}")
        tok = self.tok
        self.i += 1
        return tok

    def parse(self):
        e = self.expr()
        if self.tok.kind != "eof":
            self.error("expected ';', '#' or end of input")
        return e

    def expr(self):
        e = self.scaled()
        while self.at(";"):
            tok = self.expect(";")
            e = Compose(e, self.scaled(), pos=(tok.line, tok.col))
        return e

    def scaled(self):
        tok = self.tok
        if tok.kind == "num" or self.at("-") or self.at("z"):
            lit = self.scalar()
            self.expect("*")
            return Scale(lit, self.tens(), pos=(tok.line, tok.col))
        return self.tens()

    def tens(self):
        e = self.atom()
        while self.at("#"):
            tok = self.expect("#")
            e = Tensor(e, self.atom(), pos=(tok.line, tok.col))
        return e

    def atom(self):
        tok = self.tok
        pos = (tok.line, tok.col)
        if self.at("id"):
            self.i += 1
            self.expect("(")
            if self.tok.kind != "num":
                self.error("expected a natural number")
            k = int(self.tok.text)
            self.i += 1
            self.expect(")")
            return Id(k, pos=pos)
        if self.at("f"):
            self.i += 1
            return Cap(pos=pos)
        if self.at("g"):
            self.i += 1
            return Cup(pos=pos)
        if self.at("("):
            self.i += 1
            e = self.expr()
            self.expect(")")
            return e
        self.error("expected 'id(k)', 'f', 'g' or '('")

    def integer(self) -> int:
        sign = 1
        if self.at("-"):
            self.i += 1
            sign = -1
        if self.tok.kind != "num":
            self.error("expected an integer")
        v = int(self.tok.text)
        self.i += 1
        return sign * v

    def scalar(self) -> ScalarLit:
        coeff = Fraction(1)
        if not self.at("z"):
            num = self.integer()
            den = 1
            if self.at("/"):
                self.i += 1
                tok = self.tok
                if tok.kind != "num":
                    self.error("expected a denominator")
                den = int(tok.text)
                if den == 0:
                    raise DSLSyntaxError("zero denominator", tok.line, tok.col)
                self.i += 1
            coeff = Fraction(num, den)
        exp = 0
        if self.at("z"):
            self.i += 1
            self.expect("^")
            exp = self.integer()
        return ScalarLit(coeff, exp)


def parse(src: str):
    """Parse ``src`` into an expression tree; raises :class:`DSLSyntaxError`."""
    if not isinstance(src, str):
        raise TypeError("source must be a string")
    return _Parser(src).parse()


# -- elaboration -----------------------------------------------------------------


def _lit_value(lit: ScalarLit, n: int) -> CycScalar:
    return CycScalar.rational(n, lit.coeff) * RootPower(n, lit.exp)


def elaborate(e, spec: CocycleSpec, max_atoms: int | None = None) -> DiagramWord:
    """Turn an expression into a :class:`DiagramWord`, checking arities."""
    limit = max_atoms_default() if max_atoms is None else max_atoms

    def go(e) -> DiagramWord:
        if isinstance(e, Id):
            if e.k > limit:
                raise ElaborationError(f"id({e.k}) exceeds the size limit of {limit} atoms", *e.pos)
            return DiagramWord.identity(spec, e.k)
        if isinstance(e, Cap):
            return DiagramWord.cap(spec)
        if isinstance(e, Cup):
            return DiagramWord.cup(spec)
        if isinstance(e, Scale):
            return go(e.expr).scale(_lit_value(e.scalar, spec.n))
        if isinstance(e, Tensor):
            w = tensor(go(e.left), go(e.right))
        elif isinstance(e, Compose):
            top, bottom = go(e.top), go(e.bottom)
            try:
                w = compose(top, bottom)
            except CompositionError:
                raise ElaborationError(
                    f"arity mismatch: top has codomain {top.cod}, bottom has domain {bottom.dom}",
                    *e.pos,
                    source=unparse(e),
                ) from None
        else:
            raise TypeError(f"not an expression node: {e!r}")
        if w.atom_count() > limit:
            raise ElaborationError(f"word exceeds the size limit of {limit} atoms", *e.pos)
        return w

    try:
        return go(e)
    except WordTooLarge as exc:
        raise ElaborationError(str(exc), 1, 1) from None


# -- printing --------------------------------------------------------------------


def _frac_text(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _scalar_text(c: Fraction, e: int) -> str:
    if e == 0:
        return _frac_text(c)
    if c == 1:
        return f"z^{e}"
    return f"{_frac_text(c)} z^{e}"


def _slice_text(slc) -> str:
    parts, run = [], 0
    for atom in slc:
        if atom is STRAND:
            run += 1
            continue
        if run:
            parts.append(f"id({run})")
            run = 0
        parts.append("f" if atom is CAP else "g")
    if run or not parts:
        parts.append(f"id({run})")
    return " # ".join(parts)


def print_word(w: DiagramWord) -> str:
    """Render a word in the surface syntax.

    The scalar must be a rational multiple of a power of theta, which holds
    for every word built from the language itself.
    """
    if w.is_zero():
        nf = NormalForm(w.spec, w.dom, w.cod, CycScalar.one(w.spec.n))
        if not nf.hom_dim:
            raise ValueError(f"Hom({w.dom}, {w.cod}) is zero and has no word to print")
        return f"0 * ({print_word(nf.to_word())})"
    body = " ; ".join(_slice_text(s) for s in w.slices) if w.slices else f"id({w.dom})"
    mono = w.scalar.as_monomial()
    if mono is None:
        raise ValueError(f"scalar {w.scalar} is not a monomial and cannot be written in the DSL")
    c, e = mono
    if c == 1 and e == 0:
        return body
    return f"{_scalar_text(c, e)} * ({body})"


def unparse(e) -> str:
    """Source text for an expression tree, fully parenthesized where needed."""
    if isinstance(e, Id):
        return f"id({e.k})"
    if isinstance(e, Cap):
        return "f"
    if isinstance(e, Cup):
        return "g"
    if isinstance(e, Tensor):
        right = unparse(e.right)
        if isinstance(e.right, (Tensor, Compose, Scale)):
            right = f"({right})"
        left = unparse(e.left)
        if isinstance(e.left, (Compose, Scale)):
            left = f"({left})"
        return f"{left} # {right}"
    if isinstance(e, Compose):
        bottom = unparse(e.bottom)
        if isinstance(e.bottom, Compose):
            bottom = f"({bottom})"
        return f"{unparse(e.top)} ; {bottom}"
    if isinstance(e, Scale):
        inner = unparse(e.expr)
        if not isinstance(e.expr, (Id, Cap, Cup)):
            inner = f"({inner})"
        return f"{_scalar_text(e.scalar.coeff, e.scalar.exp)} * {inner}"
    raise TypeError(f"not an expression node: {e!r}")


def ast_to_json(e) -> dict:
    if isinstance(e, Id):
        return {"node": "id", "k": e.k}
    if isinstance(e, Cap):
        return {"node": "cap"}
    if isinstance(e, Cup):
        return {"node": "cup"}
    if isinstance(e, Tensor):
        return {"node": "tensor", "left": ast_to_json(e.left), "right": ast_to_json(e.right)}
    if isinstance(e, Compose):
        return {"node": "compose", "top": ast_to_json(e.top), "bottom": ast_to_json(e.bottom)}
    if isinstance(e, Scale):
        return {
            "node": "scale",
            "coeff": _frac_text(e.scalar.coeff),
            "z": e.scalar.exp,
            "expr": ast_to_json(e.expr),
        }
    raise TypeError(f"not an expression node: {e!r}")
