"""Reading and writing proof files.

A proof file holds one tree::

    (rule <tag> [:eigen <name>] :conclusion <sequent> :premises (<rule>*))

where a sequent is ``(seq (<formula>*) (<formula>?))`` and every formula is
a double-quoted string in the formula syntax of
:mod:`ordforge.syntax.parser`.  :func:`print_proof` writes a canonical
layout with one node per line group.  Printing a parsed canonical file
reproduces it byte for byte.
"""

from __future__ import annotations

import re

from ..errors import ParseError
from ..syntax.ast import Sequent, Theory
from ..syntax.parser import parse_formula, print_formula
from .derivation import Derivation

__all__ = ["parse_proof", "print_proof", "parse_sexpr", "load_proof", "dump_proof"]

_TOK = re.compile(r'\s+|;[^\n]*|(?P<lp>\()|(?P<rp>\))|(?P<str>"[^"]*")|(?P<atom>[^\s()";]+)')


class _Str(str):
    """A string literal, as opposed to a bare atom."""


def parse_sexpr(text: str):
    """Parse one s-expression into nested lists of atoms (``str``) and
    string literals (:class:`_Str`).  Returns ``(value, offsets)`` where
    ``offsets`` maps ``id`` of every list and literal to its source offset."""
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOK.match(text, pos)
        if m is None:
            bad = text[pos]
            msg = "unterminated string" if bad == '"' else f"unexpected character {bad!r}"
            raise ParseError(msg, pos, text)
        if m.lastgroup:
            toks.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    offsets: dict = {}
    stack: list = []
    result = None
    for kind, val, at in toks:
        if kind == "lp":
            lst: list = []
            offsets[id(lst)] = at
            stack.append(lst)
        elif kind == "rp":
            if not stack:
                raise ParseError("unbalanced ')'", at, text)
            done = stack.pop()
            if stack:
                stack[-1].append(done)
            elif result is None:
                result = done
            else:
                raise ParseError("more than one top-level expression", at, text)
        else:
            item = _Str(val[1:-1]) if kind == "str" else val
            offsets[id(item)] = at
            if not stack:
                raise ParseError("expected '('", at, text)
            stack[-1].append(item)
    if stack:
        raise ParseError("unbalanced '(': missing ')'", len(text), text)
    if result is None:
        raise ParseError("empty proof file", 0, text)
    return result, offsets


class _Reader:
    def __init__(self, text: str, theory: Theory):
        self.text = text
        self.theory = theory
        self.value, self.offsets = parse_sexpr(text)

    def err(self, msg, obj):
        raise ParseError(msg, self.offsets.get(id(obj), 0), self.text)

    def formula(self, item):
        if not isinstance(item, _Str):
            self.err("formulas must be double-quoted strings", item)
        try:
            return parse_formula(str(item), self.theory)
        except ParseError as exc:
            base = self.offsets.get(id(item), 0) + 1
            raise ParseError(f"in formula: {exc.message}", base + (exc.position or 0),
                             self.text) from None

    def sequent(self, item):
        if not (isinstance(item, list) and len(item) == 3 and item[0] == "seq"
                and isinstance(item[1], list) and isinstance(item[2], list)):
            self.err("expected (seq (<formula>*) (<formula>?))", item)
        if len(item[2]) > 1:
            self.err("a sequent has at most one succedent formula", item[2])
        return Sequent(tuple(self.formula(f) for f in item[1]),
                       tuple(self.formula(f) for f in item[2]))

    def rule(self, item) -> Derivation:
        if not (isinstance(item, list) and len(item) >= 2 and item[0] == "rule"):
            self.err("expected (rule <tag> ...)", item)
        tag = item[1]
        if isinstance(tag, (list, _Str)):
            self.err("rule tag must be a bare word", tag)
        fields: dict = {}
        rest = item[2:]
        if len(rest) % 2:
            self.err("keyword without a value", item)
        for key, val in zip(rest[::2], rest[1::2]):
            if key not in (":eigen", ":conclusion", ":premises"):
                self.err(f"unknown keyword {key!r}", key)
            if key in fields:
                self.err(f"duplicate keyword {key}", key)
            fields[key] = val
        if ":conclusion" not in fields:
            self.err("missing :conclusion", item)
        prem = fields.get(":premises", [])
        if not isinstance(prem, list):
            self.err(":premises must be a list", prem)
        eigen = fields.get(":eigen")
        if eigen is not None and isinstance(eigen, (list, _Str)):
            self.err(":eigen must be a bare variable name", eigen)
        return Derivation(self.sequent(fields[":conclusion"]), str(tag),
                          tuple(self.rule(p) for p in prem), eigen and str(eigen))


def parse_proof(text: str, theory: Theory | str = Theory.IKP) -> Derivation:
    r = _Reader(text, Theory.parse(theory))
    return r.rule(r.value)


def _seq_text(s: Sequent) -> str:
    g = " ".join(f'"{print_formula(f)}"' for f in s.gamma)
    d = " ".join(f'"{print_formula(f)}"' for f in s.delta)
    return f"(seq ({g}) ({d}))"


def _emit(d: Derivation, ind: int, out: list) -> None:
    pad = " " * ind
    head = f"{pad}(rule {d.rule}"
    if d.eigen:
        head += f" :eigen {d.eigen}"
    out.append(head)
    out.append(f"{pad}  :conclusion {_seq_text(d.conclusion)}")
    if not d.premises:
        out.append(f"{pad}  :premises ())")
        return
    out.append(f"{pad}  :premises (")
    for p in d.premises:
        _emit(p, ind + 4, out)
    out[-1] += "))"


def print_proof(d: Derivation) -> str:
    out: list = []
    _emit(d, 0, out)
    return "\n".join(out) + "\n"


def load_proof(path, theory: Theory | str = Theory.IKP) -> Derivation:
    with open(path, encoding="utf-8") as fh:
        return parse_proof(fh.read(), theory)


def dump_proof(d: Derivation, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(print_proof(d))
