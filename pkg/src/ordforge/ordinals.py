"""Ordinal notations below the first epsilon number after Omega.

A notation is a finite sum of *principal* terms written in weakly
decreasing order.  There are three kinds of principal term:

* ``OMEGA_TERM``: the big pivot ordinal, written ``W`` in text syntax;
* ``Veblen(a, b)``: the binary Veblen function, where ``Veblen(0, b)`` is ``w^b``
  and ``Veblen(0, 0)`` encodes the ordinal one;
* ``Psi(a)``: the collapse of ``a`` below the pivot.

Every object is hash-consed.  Two notations that are structurally equal are
therefore the same Python object, and because normal forms are unique,
identity coincides with ordinal equality on normal terms.  Terms can be
built in raw form (for example ``Ord((Veblen(ZERO, W),))``), which can be
non-normal.  The smart constructors (:func:`add`, :func:`veblen`,
:func:`omega_pow`, ...) always return normal forms, and :func:`normalize`
rewrites a raw term into one.

The order on normal forms is decided by the usual recursive rules.  Sums
compare lexicographically on their summands.  Terms whose leading exponent
exceeds the pivot are above it, and collapsed terms are below it.  Two
Veblen terms are compared with the three-way rule on their first arguments.
"""

from __future__ import annotations

import enum
from typing import Iterable, Iterator

from .errors import NonNormalInput, NonNormalPsiArgument, OrdinalRangeError

__all__ = [
    "Ord", "Principal", "Veblen", "Psi", "OMEGA_TERM", "Ordering",
    "ZERO", "ONE", "OMEGA", "W", "nat", "compare", "add", "nat_sum", "omega_pow",
    "veblen", "omega_tower", "succ", "ord_max", "mul_omega", "normalize",
    "is_normal", "psi_arguments", "is_limit", "is_successor", "finite_value",
    "omega_big_pow", "leading_exponent",
]


class Ordering(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @property
    def symbol(self) -> str:
        return {-1: "<", 0: "=", 1: ">"}[self.value]


# ---------------------------------------------------------------------------
# term objects

# category codes used by the comparison: collapsed-range terms, the pivot
# itself, and "big" powers whose exponent exceeds the pivot.
_SMALL, _PIVOT, _BIG = 0, 1, 2


class Principal:
    """Base class of the additively principal building blocks."""

    __slots__ = ("normal", "cat", "__weakref__")

    def __setattr__(self, name, value):
        raise AttributeError("ordinal terms are immutable")


class _OmegaTerm(Principal):
    __slots__ = ()
    _instance: "_OmegaTerm | None" = None

    def __new__(cls):
        if cls._instance is None:
            obj = object.__new__(cls)
            object.__setattr__(obj, "normal", True)
            object.__setattr__(obj, "cat", _PIVOT)
            cls._instance = obj
        return cls._instance

    def __reduce__(self):
        return (_OmegaTerm, ())

    def __repr__(self):
        return "OMEGA_TERM"


OMEGA_TERM = _OmegaTerm()


class Veblen(Principal):
    """Raw binary Veblen term ``phi(a, b)``.  No normalization is performed."""

    __slots__ = ("a", "b")
    _table: dict = {}

    def __new__(cls, a: "Ord", b: "Ord"):
        key = (a, b)
        obj = cls._table.get(key)
        if obj is not None:
            return obj
        if not (isinstance(a, Ord) and isinstance(b, Ord)):
            raise TypeError("Veblen arguments must be Ord instances")
        obj = object.__new__(cls)
        object.__setattr__(obj, "a", a)
        object.__setattr__(obj, "b", b)
        big = a is ZERO and _exceeds_pivot(b)
        object.__setattr__(obj, "cat", _BIG if big else _SMALL)
        object.__setattr__(obj, "normal", None)
        obj = cls._table.setdefault(key, obj)
        if obj.normal is None:
            object.__setattr__(obj, "normal", _veblen_is_normal(a, b))
        return obj

    def __reduce__(self):
        return (Veblen, (self.a, self.b))

    def __repr__(self):
        return f"Veblen({self.a!r}, {self.b!r})"


class Psi(Principal):
    """Raw collapsed term ``psi(a)``."""

    __slots__ = ("arg",)
    _table: dict = {}

    def __new__(cls, arg: "Ord"):
        obj = cls._table.get(arg)
        if obj is not None:
            return obj
        if not isinstance(arg, Ord):
            raise TypeError("Psi argument must be an Ord instance")
        obj = object.__new__(cls)
        object.__setattr__(obj, "arg", arg)
        object.__setattr__(obj, "cat", _SMALL)
        object.__setattr__(obj, "normal", None)
        obj = cls._table.setdefault(arg, obj)
        if obj.normal is None:
            object.__setattr__(obj, "normal", arg.normal and _in_closure(arg, arg))
        return obj

    def __reduce__(self):
        return (Psi, (self.arg,))

    def __repr__(self):
        return f"Psi({self.arg!r})"


class Ord:
    """An ordinal notation: a tuple of principal terms.

    Instances are interned, so ``x is y`` is the fastest equality test and
    ``==`` falls back to it.  Rich comparisons use :func:`compare` and raise
    :class:`NonNormalInput` on raw non-normal operands.
    """

    __slots__ = ("terms", "normal", "_hash", "__weakref__")
    _table: dict = {}

    def __new__(cls, terms: Iterable[Principal] = ()):
        terms = tuple(terms)
        obj = cls._table.get(terms)
        if obj is not None:
            return obj
        for h in terms:
            if not isinstance(h, Principal):
                raise TypeError(f"not a principal term: {h!r}")
        obj = object.__new__(cls)
        object.__setattr__(obj, "terms", terms)
        object.__setattr__(obj, "_hash", hash(("Ord", terms)))
        object.__setattr__(obj, "normal", None)
        obj = cls._table.setdefault(terms, obj)
        if obj.normal is None:
            ok = all(h.normal for h in terms) and all(
                _cmp_p(terms[i], terms[i + 1]) >= 0 for i in range(len(terms) - 1))
            object.__setattr__(obj, "normal", ok)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("ordinal terms are immutable")

    def __reduce__(self):
        return (Ord, (self.terms,))

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return self is other

    def __ne__(self, other):
        return self is not other

    def __lt__(self, other: "Ord") -> bool:
        return compare(self, other) is Ordering.LESS

    def __le__(self, other: "Ord") -> bool:
        return compare(self, other) is not Ordering.GREATER

    def __gt__(self, other: "Ord") -> bool:
        return compare(self, other) is Ordering.GREATER

    def __ge__(self, other: "Ord") -> bool:
        return compare(self, other) is not Ordering.LESS

    def __add__(self, other: "Ord | int") -> "Ord":
        return add(self, _coerce(other))

    def __radd__(self, other: int) -> "Ord":
        return add(_coerce(other), self)

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self) -> Iterator[Principal]:
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        from .ordtext import to_text
        try:
            return f"Ord({to_text(self)!r})"
        except Exception:  # raw terms outside the printable fragment
            return f"Ord({self.terms!r})"

    def __str__(self):
        from .ordtext import to_text
        return to_text(self)


def _coerce(x) -> Ord:
    if isinstance(x, Ord):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return nat(x)
    raise TypeError(f"cannot use {x!r} as an ordinal")


def _exceeds_pivot(b: Ord) -> bool:
    """Structural test ``b > W`` used when categorising raw power terms."""
    if not b.terms:
        return False
    lead = b.terms[0]
    if lead is OMEGA_TERM:
        return len(b.terms) > 1
    return getattr(lead, "cat", _SMALL) == _BIG


# ---------------------------------------------------------------------------
# comparison

_CMP_CACHE: dict = {}


def _cmp_p(p: Principal, q: Principal) -> int:
    if p is q:
        return 0
    key = (p, q)
    r = _CMP_CACHE.get(key)
    if r is None:
        r = _cmp_p_uncached(p, q)
        _CMP_CACHE[key] = r
        _CMP_CACHE[(q, p)] = -r
    return r


def _cmp_p_uncached(p: Principal, q: Principal) -> int:
    if p.cat != q.cat:
        return -1 if p.cat < q.cat else 1
    if p.cat == _PIVOT:
        return 0
    if p.cat == _BIG:
        return _cmp(p.b, q.b)
    if isinstance(p, Psi):
        if isinstance(q, Psi):
            return _cmp(p.arg, q.arg)
        return -_cmp_veblen_psi(q, p)
    if isinstance(q, Psi):
        return _cmp_veblen_psi(p, q)
    # two Veblen terms below the pivot
    c = _cmp(p.a, q.a)
    if c == 0:
        return _cmp(p.b, q.b)
    if c < 0:
        # phi(a,b) < phi(c,d) with a < c  iff  b < phi(c,d)
        return -1 if _cmp_sum_principal(p.b, q) < 0 else 1
    # a > c: phi(a,b) < phi(c,d)  iff  phi(a,b) < d  (equality impossible)
    return -1 if _cmp_sum_principal(q.b, p) > 0 else 1


def _cmp_veblen_psi(p: Veblen, q: Psi) -> int:
    """phi(a,b) vs psi(x): phi(a,b) < psi(x) iff both arguments are below it."""
    if _cmp_sum_principal(p.a, q) < 0 and _cmp_sum_principal(p.b, q) < 0:
        return -1
    return 1


def _cmp_sum_principal(x: Ord, p: Principal) -> int:
    """Compare a sum with a single principal term."""
    if not x.terms:
        return -1
    c = _cmp_p(x.terms[0], p)
    if c != 0:
        return c
    return 0 if len(x.terms) == 1 else 1


def _cmp(x: Ord, y: Ord) -> int:
    if x is y:
        return 0
    xs, ys = x.terms, y.terms
    for h, k in zip(xs, ys):
        c = _cmp_p(h, k)
        if c:
            return c
    return (len(xs) > len(ys)) - (len(xs) < len(ys))


def _require_normal(*xs: Ord) -> None:
    for x in xs:
        if not isinstance(x, Ord):
            raise TypeError(f"expected an ordinal term, got {type(x).__name__}")
        if not x.normal:
            raise NonNormalInput(f"term is not in normal form: {x.terms!r}")


def compare(a: Ord, b: Ord) -> Ordering:
    """Three-way comparison of two normal notations."""
    _require_normal(a, b)
    return Ordering(_cmp(a, b))


# ---------------------------------------------------------------------------
# normal-form conditions

def _veblen_reduce(a: Ord, b: Ord) -> Ord | None:
    """Return the normal form that ``phi(a,b)`` collapses to, or ``None`` if the
    pair already forms a normal principal term.  Arguments must be normal.
    """
    if a is ZERO:
        if len(b.terms) == 1:
            h = b.terms[0]
            if h is OMEGA_TERM or isinstance(h, Psi) or (isinstance(h, Veblen) and h.a is not ZERO):
                return b
        return None
    if _cmp(a, W) >= 0:
        if a is W and b is ZERO:
            return W
        raise OrdinalRangeError("Veblen index at or above the pivot lies outside the notation system")
    cb = _cmp(b, W)
    if cb == 0:
        return W
    if cb > 0:
        raise OrdinalRangeError("Veblen value above the pivot lies outside the notation system")
    if len(b.terms) == 1:
        h = b.terms[0]
        if isinstance(h, Veblen) and _cmp(h.a, a) > 0:
            return b
        if isinstance(h, Psi) and _cmp_sum_principal(a, h) < 0:
            return b
    if b is ZERO and len(a.terms) == 1 and isinstance(a.terms[0], Psi):
        return a
    return None


def _veblen_is_normal(a: Ord, b: Ord) -> bool:
    if not (a.normal and b.normal):
        return False
    try:
        return _veblen_reduce(a, b) is None
    except OrdinalRangeError:
        return False


def psi_arguments(x: Ord) -> Iterator[Ord]:
    """Yield the arguments of the outermost collapsed subterms of ``x``."""
    for h in x.terms:
        if isinstance(h, Psi):
            yield h.arg
        elif isinstance(h, Veblen):
            yield from psi_arguments(h.a)
            yield from psi_arguments(h.b)


def _in_closure(alpha: Ord, x: Ord) -> bool:
    """Membership of ``x`` in the closure stage indexed by ``alpha``."""
    for h in x.terms:
        if isinstance(h, Psi):
            if not (_cmp(h.arg, alpha) < 0 and _in_closure(alpha, h.arg)):
                return False
        elif isinstance(h, Veblen):
            if not (_in_closure(alpha, h.a) and _in_closure(alpha, h.b)):
                return False
    return True


def is_normal(x: Ord) -> bool:
    return bool(isinstance(x, Ord) and x.normal)


# the constants come after the comparison helpers because interning a
# Veblen term already consults them.
ZERO = Ord(())
_ONE_TERM = Veblen(ZERO, ZERO)
ONE = Ord((_ONE_TERM,))
W = Ord((OMEGA_TERM,))
OMEGA = Ord((Veblen(ZERO, ONE),))


# ---------------------------------------------------------------------------
# smart constructors and arithmetic

def nat(n: int) -> Ord:
    """The finite ordinal ``n`` as a sum of ones."""
    if n < 0:
        raise ValueError("finite ordinals are non-negative")
    return Ord((_ONE_TERM,) * n)


def finite_value(x: Ord) -> int | None:
    """Return ``n`` if ``x`` is the finite ordinal ``n``, otherwise ``None``."""
    if all(h is _ONE_TERM for h in x.terms):
        return len(x.terms)
    return None


def omega_pow(e: Ord) -> Ord:
    """``w^e``.  Epsilon-like principal terms (the pivot included) are fixed."""
    _require_normal(e)
    red = _veblen_reduce(ZERO, e)
    if red is not None:
        return red
    return Ord((Veblen(ZERO, e),))


def veblen(a: Ord, b: Ord) -> Ord:
    """Binary Veblen function with fixed-point absorption."""
    _require_normal(a, b)
    red = _veblen_reduce(a, b)
    if red is not None:
        return red
    return Ord((Veblen(a, b),))


def add(a: Ord, b: Ord) -> Ord:
    """Ordinal sum: summands of ``a`` below the leading summand of ``b`` vanish."""
    _require_normal(a, b)
    if not b.terms:
        return a
    if not a.terms:
        return b
    lead = b.terms[0]
    keep = len(a.terms)
    while keep and _cmp_p(a.terms[keep - 1], lead) < 0:
        keep -= 1
    return Ord(a.terms[:keep] + b.terms)


def nat_sum(a: Ord, b: Ord) -> Ord:
    """Natural (Hessenberg) sum: merge the summands in decreasing order."""
    _require_normal(a, b)
    if not a.terms:
        return b
    if not b.terms:
        return a
    out = []
    i = j = 0
    xs, ys = a.terms, b.terms
    while i < len(xs) and j < len(ys):
        if _cmp_p(xs[i], ys[j]) >= 0:
            out.append(xs[i])
            i += 1
        else:
            out.append(ys[j])
            j += 1
    out.extend(xs[i:])
    out.extend(ys[j:])
    return Ord(out)


def succ(a: Ord) -> Ord:
    return add(a, ONE)


def ord_max(*xs: Ord) -> Ord:
    """Largest of the arguments; the maximum of nothing is zero."""
    best = ZERO
    for x in xs:
        _require_normal(x)
        if _cmp(x, best) > 0:
            best = x
    return best


def omega_tower(n: int, a: Ord) -> Ord:
    """``n``-fold iterate of ``w^-`` starting from ``a``."""
    if n < 0:
        raise ValueError("tower height must be non-negative")
    x = a
    _require_normal(x)
    for _ in range(n):
        x = omega_pow(x)
    return x


def leading_exponent(h: Principal) -> Ord:
    """The exponent ``e`` with ``h = w^e``."""
    if isinstance(h, Veblen) and h.a is ZERO:
        return h.b
    return Ord((h,))


def mul_omega(a: Ord) -> Ord:
    """Left multiplication by omega, ``w * a``.

    Multiplication distributes over the summands from the left, and
    ``w * w^e = w^(1+e)``.
    """
    _require_normal(a)
    out = ZERO
    for h in a.terms:
        out = add(out, omega_pow(add(ONE, leading_exponent(h))))
    return out


def omega_big_pow(m: int | Ord) -> Ord:
    """``W * w^m`` written as ``w^(W+m)``."""
    return omega_pow(add(W, _coerce(m)))


def is_successor(a: Ord) -> bool:
    return bool(a.terms) and a.terms[-1] is _ONE_TERM


def is_limit(a: Ord) -> bool:
    return bool(a.terms) and a.terms[-1] is not _ONE_TERM


def normalize(x) -> Ord:
    """Rewrite a raw term (or an :mod:`ordforge.ordtext` expression tree) into
    normal form.  Normal inputs are returned unchanged.
    """
    if isinstance(x, Ord):
        if x.normal:
            return x
        out = ZERO
        for h in x.terms:
            out = add(out, _normalize_principal(h))
        return out
    from .ordtext import evaluate
    return evaluate(x)


def _normalize_principal(h: Principal) -> Ord:
    if h is OMEGA_TERM:
        return W
    if isinstance(h, Veblen):
        return veblen(normalize(h.a), normalize(h.b))
    if isinstance(h, Psi):
        arg = normalize(h.arg)
        if not _in_closure(arg, arg):
            raise NonNormalPsiArgument("collapse argument is not in its own closure stage")
        return Ord((Psi(arg),))
    raise TypeError(f"unknown principal {h!r}")
