"""ASCII text syntax for ordinal notations.

Grammar (``+`` and ``#`` share one precedence level and associate to the left)::

    expr  := term (("+" | "#") term)*
    term  := atom ("^" atom)?          # the base must be w
    atom  := NUMBER | "w" | "W" | "(" expr ")"
           | "phi" "(" expr "," expr ")" | "psi" "(" expr ")"
           | "tower" "(" NUMBER "," expr ")"

The canonical printer emits summands joined by ``+`` with no spaces.  Runs
of ones become a decimal numeral, ``w^1`` prints as ``w``, other powers print
as ``w^(e)``, the pivot prints as ``W``, and the remaining principal terms
print as ``phi(a,b)`` and ``psi(a)``.  Parsing the canonical text of a
normal form gives back the very same object.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .errors import ParseError
from .ordinals import (
    OMEGA, OMEGA_TERM, ONE, W, ZERO, Ord, Psi, Veblen, add, nat, nat_sum,
    normalize, omega_pow, omega_tower, veblen,
)

__all__ = ["parse_ord", "parse_ord_expr", "evaluate", "to_text", "pretty", "OrdExpr"]


# -- raw expression trees ---------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Sym:
    name: str  # "w" or "W"


@dataclass(frozen=True)
class Sum:
    op: str  # "+" or "#"
    left: "OrdExpr"
    right: "OrdExpr"


@dataclass(frozen=True)
class Pow:
    exponent: "OrdExpr"


@dataclass(frozen=True)
class Phi:
    a: "OrdExpr"
    b: "OrdExpr"


@dataclass(frozen=True)
class PsiE:
    arg: "OrdExpr"


@dataclass(frozen=True)
class Tower:
    height: int
    base: "OrdExpr"


OrdExpr = Union[Num, Sym, Sum, Pow, Phi, PsiE, Tower, Ord]


def evaluate(e: OrdExpr) -> Ord:
    """Normalise an expression tree."""
    if isinstance(e, Ord):
        return normalize(e)
    if isinstance(e, Num):
        return nat(e.value)
    if isinstance(e, Sym):
        return OMEGA if e.name == "w" else W
    if isinstance(e, Sum):
        left, right = evaluate(e.left), evaluate(e.right)
        return add(left, right) if e.op == "+" else nat_sum(left, right)
    if isinstance(e, Pow):
        return omega_pow(evaluate(e.exponent))
    if isinstance(e, Phi):
        return veblen(evaluate(e.a), evaluate(e.b))
    if isinstance(e, PsiE):
        return normalize(Ord((Psi(evaluate(e.arg)),)))
    if isinstance(e, Tower):
        return omega_tower(e.height, evaluate(e.base))
    raise TypeError(f"not an ordinal expression: {e!r}")


# -- parser -------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]+)|(.))")


def _tokenize(text: str):
    pos = 0
    toks = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        if m.group(0).strip() == "":
            pos = m.end()
            continue
        start = m.start(m.lastindex)
        if m.group(1):
            toks.append(("num", m.group(1), start))
        elif m.group(2):
            toks.append(("id", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+#^(),":
                raise ParseError(f"unexpected character {ch!r}", start, text)
            toks.append((ch, ch, start))
        pos = m.end()
    toks.append(("eof", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind: str | None = None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            want = "end of input" if kind == "eof" else repr(kind)
            got = "end of input" if tok[0] == "eof" else repr(tok[1])
            raise ParseError(f"expected {want}, found {got}", tok[2], self.text)
        self.i += 1
        return tok

    def expr(self) -> OrdExpr:
        left = self.term()
        while self.peek()[0] in ("+", "#"):
            op = self.take()[0]
            left = Sum(op, left, self.term())
        return left

    def term(self) -> OrdExpr:
        start = self.peek()[2]
        base = self.atom()
        if self.peek()[0] == "^":
            if base != Sym("w"):
                raise ParseError("only w may be raised to a power", start, self.text)
            self.take("^")
            return Pow(self.atom())
        return base

    def atom(self) -> OrdExpr:
        kind, val, pos = self.take()
        if kind == "num":
            return Num(int(val))
        if kind == "(":
            e = self.expr()
            self.take(")")
            return e
        if kind == "id":
            if val in ("w", "W"):
                return Sym(val)
            if val == "phi":
                self.take("(")
                a = self.expr()
                self.take(",")
                b = self.expr()
                self.take(")")
                return Phi(a, b)
            if val == "psi":
                self.take("(")
                a = self.expr()
                self.take(")")
                return PsiE(a)
            if val == "tower":
                self.take("(")
                n = int(self.take("num")[1])
                self.take(",")
                a = self.expr()
                self.take(")")
                return Tower(n, a)
            raise ParseError(f"unknown name {val!r}", pos, self.text)
        got = "end of input" if kind == "eof" else repr(val)
        raise ParseError(f"unexpected {got}", pos, self.text)


def parse_ord_expr(text: str) -> OrdExpr:
    """Parse text into an unnormalised expression tree."""
    p = _Parser(text)
    e = p.expr()
    p.take("eof")
    return e


def parse_ord(text: str) -> Ord:
    """Parse and normalise."""
    return evaluate(parse_ord_expr(text))


# -- printers -----------------------------------------------------------------

_ONE_P = ONE.terms[0]
_OMEGA_P = OMEGA.terms[0]


def _runs(x: Ord):
    terms = x.terms
    i = 0
    while i < len(terms):
        j = i
        while j < len(terms) and terms[j] is terms[i]:
            j += 1
        yield terms[i], j - i
        i = j


def _principal_text(h) -> str:
    if h is OMEGA_TERM:
        return "W"
    if isinstance(h, Psi):
        return f"psi({to_text(h.arg)})"
    if h is _OMEGA_P:
        return "w"
    if h.a is ZERO:
        return f"w^({to_text(h.b)})"
    return f"phi({to_text(h.a)},{to_text(h.b)})"


def to_text(x: Ord) -> str:
    """Canonical ASCII rendering; inverse of :func:`parse_ord` on normal forms."""
    if not x.terms:
        return "0"
    parts = []
    for h, k in _runs(x):
        if h is _ONE_P:
            parts.append(str(k))
        else:
            parts.extend([_principal_text(h)] * k)
    return "+".join(parts)


_SUP = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def _pretty_principal(h) -> str:
    if h is OMEGA_TERM:
        return "Ω"
    if isinstance(h, Psi):
        return f"ψ_Ω({pretty(h.arg)})"
    if h is _OMEGA_P:
        return "ω"
    if h.a is ZERO:
        e = h.b
        if len(e.terms) >= 2 and e.terms[0] is OMEGA_TERM:
            # w^(W+k) reads better as W*w^k
            rest = Ord(e.terms[1:])
            return "Ω·" + _pretty_principal(omega_pow(rest).terms[0])
        if len(e.terms) == 1 and e.terms[0] is _ONE_P:
            return "ω"
        digits = to_text(e)
        if digits.isdigit():
            return "ω" + digits.translate(_SUP)
        return f"ω^({pretty(e)})"
    return f"φ({pretty(h.a)}, {pretty(h.b)})"


def pretty(x: Ord) -> str:
    """Unicode rendering for humans, e.g. ``Ω·ω² + ω·3 + 1``."""
    if not x.terms:
        return "0"
    parts = []
    for h, k in _runs(x):
        if h is _ONE_P:
            parts.append(str(k))
        elif k == 1:
            parts.append(_pretty_principal(h))
        else:
            parts.append(f"{_pretty_principal(h)}·{k}")
    return " + ".join(parts)
