"""Parser and printer for the ASCII formula syntax.

::

    formula  := imp
    imp      := or ("->" imp)?                       right associative
    or       := and ("|" and)*                        left associative
    and      := unary ("&" unary)*                    left associative
    unary    := "~" unary
              | ("all" | "ex") NAME "." formula       body extends maximally
              | "(" ("all"|"ex") NAME "in" term ")" unary
              | "(" ("all"|"ex") NAME "sub" term ")" unary
              | "(" ("all"|"ex") NAME "in" "exp" "(" term "," term ")" ")" unary
              | "(" formula ")"
              | term ("in" | "sub" | "=") term
              | "fun" "(" term "," term "," term ")"
    term     := NAME | "L(" ord ")" | "V(" ord ")" | "E(" ord ")"
              | "var(" INT "," ord ")" | "{" NAME "in" term "|" formula "}"

``ord`` is an ordinal in the text syntax of :mod:`ordforge.ordtext`.
"""

from __future__ import annotations

import re

from ..errors import ParseError, TheoryMismatch
from ..ordtext import parse_ord, to_text
from .ast import (
    And, Comp, Eq, Fun, Imp, IVar, Mem, Not, Or, Quant, Stage, Sub, Theory, Var,
    check_language,
)

__all__ = ["parse_formula", "parse_term", "print_formula", "print_term", "KEYWORDS"]

KEYWORDS = frozenset({"all", "ex", "in", "sub", "fun", "exp", "L", "V", "E", "var"})

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<arrow>->)
  | (?P<name>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<int>\d+)
  | (?P<sym>[()&|~.,={}+#^])
""", re.VERBOSE)


def _tokenize(text: str):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        if kind != "ws":
            toks.append((kind, m.group(), pos))
        pos = m.end()
    toks.append(("eof", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, theory: Theory):
        self.text = text
        self.theory = theory
        self.toks = _tokenize(text)
        self.i = 0

    # token helpers
    def peek(self, k: int = 0):
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def at(self, value: str, k: int = 0) -> bool:
        return self.peek(k)[1] == value and self.peek(k)[0] != "eof"

    def error(self, msg: str, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok[2], self.text)

    def expect(self, value: str):
        tok = self.peek()
        if tok[1] != value or tok[0] == "eof":
            found = "end of input" if tok[0] == "eof" else repr(tok[1])
            self.error(f"expected {value!r}, found {found}")
        self.i += 1
        return tok

    def name(self) -> str:
        tok = self.peek()
        if tok[0] != "name" or tok[1] in KEYWORDS:
            found = "end of input" if tok[0] == "eof" else repr(tok[1])
            self.error(f"expected a variable name, found {found}")
        self.i += 1
        return tok[1]

    # formulas
    def formula(self):
        left = self.disj()
        if self.peek()[0] == "arrow":
            self.i += 1
            return Imp(left, self.formula())
        return left

    def disj(self):
        left = self.conj()
        while self.at("|"):
            self.i += 1
            left = Or(left, self.conj())
        return left

    def conj(self):
        left = self.unary()
        while self.at("&"):
            self.i += 1
            left = And(left, self.unary())
        return left

    def _bounded_prefix_ahead(self) -> bool:
        return (self.at("(") and self.peek(1)[1] in ("all", "ex") and self.peek(2)[0] == "name"
                and self.peek(3)[1] in ("in", "sub"))

    def unary(self):
        tok = self.peek()
        if self.at("~"):
            self.i += 1
            return Not(self.unary())
        if tok[0] == "name" and tok[1] in ("all", "ex"):
            self.i += 1
            var = self.name()
            self.expect(".")
            return Quant(tok[1], "U", var, (), self.formula())
        if self._bounded_prefix_ahead():
            start = self.peek()
            self.i += 1
            q = self.peek()[1]
            self.i += 1
            var = self.name()
            rel = self.peek()[1]
            self.i += 1
            if rel == "in" and self.at("exp") and self.at("(", 1):
                self.i += 2
                a = self.term()
                self.expect(",")
                b = self.term()
                self.expect(")")
                kind, bounds = "exp", (a, b)
                if self.theory is not Theory.IKP_E:
                    raise TheoryMismatch(
                        f"function-space quantifiers are not available in {self.theory.label} "
                        f"(at offset {start[2]})")
            else:
                kind, bounds = ("in" if rel == "in" else "sub"), (self.term(),)
                if kind == "sub" and self.theory is not Theory.IKP_P:
                    raise TheoryMismatch(
                        f"subset-bounded quantifiers are not available in {self.theory.label} "
                        f"(at offset {start[2]})")
            self.expect(")")
            return Quant(q, kind, var, bounds, self.unary())
        if self.at("("):
            self.i += 1
            f = self.formula()
            self.expect(")")
            return f
        if tok[0] == "name" and tok[1] == "fun" and self.at("(", 1):
            self.i += 2
            x = self.term()
            self.expect(",")
            a = self.term()
            self.expect(",")
            b = self.term()
            self.expect(")")
            return Fun(x, a, b)
        left = self.term()
        rel = self.peek()
        if rel[1] == "in" and rel[0] == "name":
            self.i += 1
            return Mem(left, self.term())
        if rel[1] == "sub" and rel[0] == "name":
            self.i += 1
            return Sub(left, self.term())
        if rel[1] == "=":
            self.i += 1
            return Eq(left, self.term())
        found = "end of input" if rel[0] == "eof" else repr(rel[1])
        self.error(f"expected 'in', 'sub' or '=', found {found}", rel)

    # terms
    def _ordinal_arg(self):
        """Consume raw text up to the ``)`` closing the current argument list,
        or up to a ``,`` at nesting depth zero, and parse it as an ordinal."""
        start_tok = self.peek()
        depth = 0
        j = self.i
        while True:
            kind, val, pos = self.toks[j]
            if kind == "eof":
                raise ParseError("unterminated ordinal argument", start_tok[2], self.text)
            if val == "(":
                depth += 1
            elif val == ")":
                if depth == 0:
                    break
                depth -= 1
            elif val == "," and depth == 0:
                break
            j += 1
        end = self.toks[j][2]
        raw = self.text[start_tok[2]:end]
        try:
            value = parse_ord(raw)
        except ParseError as exc:
            off = start_tok[2] + (exc.position or 0)
            raise ParseError(f"bad ordinal: {exc.message}", off, self.text) from None
        self.i = j
        return value

    def term(self):
        tok = self.peek()
        if tok[0] == "name" and tok[1] in ("L", "V", "E") and self.at("(", 1):
            self.i += 2
            level = self._ordinal_arg()
            self.expect(")")
            t = Stage(tok[1], level)
            check_language(Mem(t, t), self.theory)
            return t
        if tok[0] == "name" and tok[1] == "var" and self.at("(", 1):
            self.i += 2
            idx = self.peek()
            if idx[0] != "int":
                self.error("expected a variable index")
            self.i += 1
            self.expect(",")
            level = self._ordinal_arg()
            self.expect(")")
            t = IVar(int(idx[1]), level)
            check_language(Mem(t, t), self.theory)
            return t
        if self.at("{"):
            self.i += 1
            var = self.name()
            self.expect("in")
            bound = self.term()
            self.expect("|")
            body = self.formula()
            self.expect("}")
            return Comp(var, bound, body)
        return Var(self.name())


def parse_formula(text: str, theory: Theory | str = Theory.IKP):
    """Parse a formula of the given theory's language."""
    p = _Parser(text, Theory.parse(theory))
    f = p.formula()
    if p.peek()[0] != "eof":
        p.error(f"unexpected {p.peek()[1]!r} after formula")
    return f


def parse_term(text: str, theory: Theory | str = Theory.IKP):
    p = _Parser(text, Theory.parse(theory))
    t = p.term()
    if p.peek()[0] != "eof":
        p.error(f"unexpected {p.peek()[1]!r} after term")
    return t


# -- printing ---------------------------------------------------------------------

_PREC_IMP, _PREC_OR, _PREC_AND, _PREC_UNARY = 1, 2, 3, 4


def print_term(t) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Stage):
        return f"{t.kind}({to_text(t.level)})"
    if isinstance(t, IVar):
        return f"var({t.index},{to_text(t.level)})"
    if isinstance(t, Comp):
        return f"{{{t.var} in {print_term(t.bound)} | {print_formula(t.body)}}}"
    raise TypeError(f"not a term: {t!r}")


def _wrap(s: str, cond: bool) -> str:
    return f"({s})" if cond else s


def _pr(f, ctx: int, top: bool) -> str:
    """Render ``f`` in a context demanding precedence ``ctx``.  ``top`` marks
    positions where an unbounded quantifier may stand without parentheses
    (the whole formula, the body of another unbounded quantifier, and the
    right operand of an implication)."""
    if isinstance(f, Mem):
        return f"{print_term(f.left)} in {print_term(f.right)}"
    if isinstance(f, Eq):
        return f"{print_term(f.left)} = {print_term(f.right)}"
    if isinstance(f, Sub):
        return f"{print_term(f.left)} sub {print_term(f.right)}"
    if isinstance(f, Fun):
        return f"fun({print_term(f.graph)},{print_term(f.dom)},{print_term(f.cod)})"
    if isinstance(f, Not):
        return "~" + _pr(f.body, _PREC_UNARY, False)
    if isinstance(f, And):
        s = f"{_pr(f.left, _PREC_AND, False)} & {_pr(f.right, _PREC_UNARY, False)}"
        return _wrap(s, ctx > _PREC_AND)
    if isinstance(f, Or):
        s = f"{_pr(f.left, _PREC_OR, False)} | {_pr(f.right, _PREC_AND, False)}"
        return _wrap(s, ctx > _PREC_OR)
    if isinstance(f, Imp):
        s = f"{_pr(f.left, _PREC_OR, False)} -> {_pr(f.right, _PREC_IMP, ctx <= _PREC_IMP and top)}"
        return _wrap(s, ctx > _PREC_IMP)
    if isinstance(f, Quant):
        if f.kind == "U":
            s = f"{f.q} {f.var} . {_pr(f.body, _PREC_IMP, True)}"
            return _wrap(s, not top)
        if f.kind == "exp":
            a, b = f.bounds
            head = f"({f.q} {f.var} in exp({print_term(a)},{print_term(b)}))"
        else:
            rel = "in" if f.kind == "in" else "sub"
            head = f"({f.q} {f.var} {rel} {print_term(f.bounds[0])})"
        return f"{head} {_pr(f.body, _PREC_UNARY, False)}"
    raise TypeError(f"not a formula: {f!r}")


def print_formula(f) -> str:
    """Canonical text; ``parse_formula(print_formula(f)) == f``."""
    return _pr(f, _PREC_IMP, True)
