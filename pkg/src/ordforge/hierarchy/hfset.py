"""Hereditarily finite sets.

A hereditarily finite set is stored as its Ackermann code: the empty set is
``0`` and a set with members ``x_1, ..., x_k`` has code
``2**code(x_1) + ... + 2**code(x_k)``.  The coding is a bijection between
hereditarily finite sets and natural numbers, so extensional equality is
plain integer equality and no separate normalisation step is needed.
Membership, inclusion and subset enumeration are all bit operations.

Codes grow as a tower of twos in the rank of the set.  Sets of rank at most
:data:`MAX_RANK` are supported; anything deeper raises
:class:`~ordforge.errors.StageCapExceeded`.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from ..errors import ParseError, StageCapExceeded

__all__ = ["HFSet", "EMPTY", "MAX_RANK", "kuratowski_pair", "parse_hfset"]

#: deepest rank an :class:`HFSet` may have (members have codes below 2**16)
MAX_RANK = 5
_MEMBER_CODE_LIMIT = 1 << 16


class HFSet:
    """An immutable hereditarily finite set identified by its Ackermann code."""

    __slots__ = ("code",)

    def __init__(self, code: int = 0):
        if code < 0:
            raise ValueError("Ackermann codes are non-negative")
        if code.bit_length() > _MEMBER_CODE_LIMIT:
            raise StageCapExceeded(f"sets of rank above {MAX_RANK} are not supported")
        object.__setattr__(self, "code", code)

    def __setattr__(self, name, value):
        raise AttributeError("HFSet is immutable")

    @classmethod
    def of(cls, members: Iterable["HFSet"] = ()) -> "HFSet":
        code = 0
        for m in members:
            if m.code >= _MEMBER_CODE_LIMIT:
                raise StageCapExceeded(f"sets of rank above {MAX_RANK} are not supported")
            code |= 1 << m.code
        return cls(code)

    # -- structure ----------------------------------------------------------

    def member_codes(self) -> Iterator[int]:
        c, i = self.code, 0
        while c:
            if c & 1:
                yield i
            c >>= 1
            i += 1

    @property
    def members(self) -> tuple:
        """Members in increasing code order."""
        return tuple(HFSet(i) for i in self.member_codes())

    def __iter__(self) -> Iterator["HFSet"]:
        return iter(self.members)

    def __len__(self) -> int:
        return bin(self.code).count("1")

    def __contains__(self, x: "HFSet") -> bool:
        return x.code < self.code.bit_length() and bool((self.code >> x.code) & 1)

    def issubset(self, other: "HFSet") -> bool:
        return self.code & ~other.code == 0

    def subsets(self) -> Iterator["HFSet"]:
        """Every subset, the empty set first."""
        mask = self.code
        sub = 0
        while True:
            yield HFSet(sub)
            if sub == mask:
                return
            sub = (sub - mask) & mask

    @property
    def rank(self) -> int:
        """Least ``n`` with the set in stage ``n + 1``."""
        if self.code == 0:
            return 0
        return 1 + max(HFSet(i).rank for i in self.member_codes())

    # -- protocol --------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, HFSet) and other.code == self.code

    def __hash__(self) -> int:
        return hash(("HFSet", self.code))

    def __lt__(self, other: "HFSet") -> bool:
        return self.code < other.code

    def __repr__(self) -> str:
        return f"HFSet({self})"

    def __str__(self) -> str:
        return "{" + ",".join(str(m) for m in self.members) + "}"

    def __reduce__(self):
        return (HFSet, (self.code,))


EMPTY = HFSet(0)


def kuratowski_pair(x0: HFSet, x1: HFSet) -> HFSet:
    """``(x0, x1) = {{x0, x1}, {x0}}``."""
    return HFSet.of((HFSet.of((x0, x1)), HFSet.of((x0,))))


def parse_hfset(text: str) -> HFSet:
    """Read brace syntax such as ``{}``, ``{{}}`` or ``{{},{{}}}``.  Repeated
    members are allowed and collapse."""
    pos = 0
    n = len(text)

    def skip():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def read() -> HFSet:
        nonlocal pos
        skip()
        if pos >= n or text[pos] != "{":
            raise ParseError("expected '{'", pos, text)
        pos += 1
        skip()
        members = []
        if pos < n and text[pos] == "}":
            pos += 1
            return EMPTY
        while True:
            members.append(read())
            skip()
            if pos < n and text[pos] == ",":
                pos += 1
                continue
            if pos < n and text[pos] == "}":
                pos += 1
                return HFSet.of(members)
            raise ParseError("expected ',' or '}'", pos, text)

    result = read()
    skip()
    if pos != n:
        raise ParseError("trailing input after set", pos, text)
    return result
