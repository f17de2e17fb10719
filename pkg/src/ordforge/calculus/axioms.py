"""Axiom schemas of the three finite calculi: instantiation and recognition.

Schemas with a formula parameter take the formula together with a variable
marking its argument place.  For example ``Separation`` takes
``[a, Var("u"), B]`` and produces the separation instance for ``B(u)``.
Recognition works the other way round.  It reads the arguments off a
candidate formula, re-instantiates the schema and compares the two up to
renaming of bound variables.

The union schema is the one that says the union of ``a`` exists,
``ex z. (all y in a)(all x in y) x in z``.
"""

from __future__ import annotations

import dataclasses

from ..errors import ClassViolation, TheoryMismatch
from ..syntax.ast import (
    BINARY, And, Comp, Eq, Fun, Imp, Mem, Not, Quant, Sequent, Sub, Theory, Var, all_, all_names,
    alpha_key, ball, bex, eall, ex_, expand, free_vars, fresh_name, sall, subst, term_free_vars,
)
from ..syntax.classes import is_delta0
from .derivation import AXIOMS

__all__ = [
    "axiom_instantiate", "axiom_formula", "axiom_arguments", "match_axiom", "INFINITY_SENTENCE",
]


def _fresh(base: str, *objs, extra=()) -> str:
    avoid = set(extra)
    for o in objs:
        if isinstance(o, Var):
            avoid.add(o.name)
        elif hasattr(o, "name") or hasattr(o, "level"):
            avoid |= term_free_vars(o)
        else:
            avoid |= free_vars(o)
    return fresh_name(base, avoid)


def _hole(v) -> str:
    if isinstance(v, Var):
        return v.name
    if isinstance(v, str):
        return v
    raise TypeError(f"expected a variable marking the argument place, got {v!r}")


def _plug(body, hole: str, t):
    return subst(body, hole, t)


def _formula_params(B, *holes) -> set:
    return set(free_vars(B)) - set(holes)


def _require_delta0(B, what: str):
    if not is_delta0(B):
        raise ClassViolation(f"{what} must be Delta0 (no unbounded quantifiers)")


INFINITY_SENTENCE = ex_("x", And(bex("y", Var("x"), Mem(Var("y"), Var("x"))),
                                 ball("y", Var("x"), bex("z", Var("x"), Mem(Var("y"), Var("z"))))))


def axiom_formula(schema: str, args: list | tuple = ()):
    """The succedent formula of a schema instance (no theory check)."""
    args = list(args)
    if schema == "Logical":
        (A,) = args
        return A
    if schema == "Pair":
        a, b = args
        z = _fresh("z", a, b)
        return ex_(z, And(Mem(a, Var(z)), Mem(b, Var(z))))
    if schema == "Union":
        (a,) = args
        z = _fresh("z", a)
        y = _fresh("y", a, extra={z})
        x = _fresh("x", a, extra={z, y})
        return ex_(z, ball(y, a, ball(x, Var(y), Mem(Var(x), Var(z)))))
    if schema == "Infinity":
        if args:
            raise ValueError("Infinity takes no arguments")
        return INFINITY_SENTENCE
    if schema == "PowerSet":
        (a,) = args
        z = _fresh("z", a)
        x = _fresh("x", a, extra={z})
        return ex_(z, sall(x, a, Mem(Var(x), Var(z))))
    if schema == "Exponentiation":
        a, b = args
        z = _fresh("z", a, b)
        x = _fresh("x", a, b, extra={z})
        return ex_(z, eall(x, a, b, Mem(Var(x), Var(z))))
    if schema == "Separation":
        a, u, B = args
        u = _hole(u)
        _require_delta0(B, "the separation formula")
        ps = _formula_params(B, u) | term_free_vars(a) | {u}
        y = fresh_name("y", ps)
        x = fresh_name("x", ps | {y})
        Bx = _plug(B, u, Var(x))
        return ex_(y, And(ball(x, Var(y), And(Mem(Var(x), a), Bx)),
                          ball(x, a, Imp(Bx, Mem(Var(x), Var(y))))))
    if schema == "Collection":
        a, u, v, G = args
        u, v = _hole(u), _hole(v)
        _require_delta0(G, "the collection formula")
        ps = _formula_params(G, u, v) | term_free_vars(a) | {u, v}
        x = fresh_name("x", ps)
        y = fresh_name("y", ps | {x})
        z = fresh_name("z", ps | {x, y})
        Gxy = _plug(_plug(G, u, Var(x)), v, Var(y))
        left = ball(x, a, ex_(y, Gxy))
        right = ex_(z, ball(x, a, bex(y, Var(z), Gxy)))
        return Imp(left, right)
    if schema == "SetInduction":
        u, F = args
        u = _hole(u)
        ps = _formula_params(F, u) | {u}
        x = fresh_name("x", ps)
        y = fresh_name("y", ps | {x})
        step = all_(x, Imp(ball(y, Var(x), _plug(F, u, Var(y))), _plug(F, u, Var(x))))
        return Imp(step, all_(x, _plug(F, u, Var(x))))
    if schema == "Extensionality":
        a, b, u, B = args
        u = _hole(u)
        _require_delta0(B, "the extensionality formula")
        return Imp(And(Eq(a, b), _plug(B, u, a)), _plug(B, u, b))
    raise ValueError(f"unknown axiom schema {schema!r}")


def axiom_instantiate(schema: str, args: list | tuple = (), theory: Theory | str = Theory.IKP,
                      gamma: tuple = ()) -> Sequent:
    """The sequent ``gamma => S`` where ``S`` is the schema instance.  For the
    logical axiom the instance formula is also added to ``gamma``."""
    theory = Theory.parse(theory)
    if schema not in AXIOMS:
        raise ValueError(f"unknown axiom schema {schema!r}")
    if theory not in AXIOMS[schema]:
        raise TheoryMismatch(f"{schema} is not an axiom of {theory.label}")
    S = axiom_formula(schema, args)
    if schema == "Logical":
        _require_delta0(S, "the logical axiom formula")
        return Sequent(tuple(gamma) + (S,), (S,))
    return Sequent(tuple(gamma), (S,))


# -- recognition ------------------------------------------------------------------------

def _same(f, g) -> bool:
    return alpha_key(f) == alpha_key(g)


def _q(f, q, kind):
    return isinstance(f, Quant) and f.q == q and f.kind == kind


def _antiunify(x, y, a, b, hole):
    """Generalise ``x`` and ``y`` into one formula with ``hole`` where ``x``
    has ``a`` and ``y`` has ``b``.  Returns None when impossible."""
    if x == y:
        return x
    if x == a and y == b:
        return Var(hole)
    if type(x) is not type(y) or not dataclasses.is_dataclass(x):
        if isinstance(x, tuple) and isinstance(y, tuple) and len(x) == len(y):
            parts = [_antiunify(p, q, a, b, hole) for p, q in zip(x, y)]
            return None if any(p is None for p in parts) else tuple(parts)
        return None
    vals = {}
    for fl in dataclasses.fields(x):
        p, q = getattr(x, fl.name), getattr(y, fl.name)
        if isinstance(p, (str, int)) or p is None:
            if p != q:
                return None
            vals[fl.name] = p
            continue
        if isinstance(p, tuple) and isinstance(q, tuple) and all(isinstance(e, str) for e in p):
            if p != q:
                return None
            vals[fl.name] = p
            continue
        r = _antiunify(p, q, a, b, hole)
        if r is None:
            return None
        vals[fl.name] = r
    return type(x)(**vals)


def _canon_term(t, names):
    if isinstance(t, Comp):
        var = names[0]
        body = subst(t.body, t.var, Var(var))
        return Comp(var, _canon_term(t.bound, names), _canon(body, names[1:]))
    return t


def _canon(f, names):
    """Rename bound variables by nesting depth using ``names``, so that
    alpha-equivalent formulas become syntactically equal."""
    if isinstance(f, Mem):
        return Mem(_canon_term(f.left, names), _canon_term(f.right, names))
    if isinstance(f, Not):
        return Not(_canon(f.body, names))
    if isinstance(f, BINARY):
        return type(f)(_canon(f.left, names), _canon(f.right, names))
    if isinstance(f, Quant):
        var = names[0]
        body = subst(f.body, f.var, Var(var))
        return Quant(f.q, f.kind, var, tuple(_canon_term(t, names) for t in f.bounds),
                     _canon(body, names[1:]))
    return f


def _canon_pair(f, g, avoid):
    """``f`` and ``g`` with bound variables renamed consistently."""
    f, g = expand(f), expand(g)
    taken = set(avoid) | all_names(f) | all_names(g)
    names = []
    for i in range(_depth(f) + _depth(g) + 1):
        n = fresh_name(f"b{i}", taken)
        taken.add(n)
        names.append(n)
    return _canon(f, names), _canon(g, names)


def _depth(f) -> int:
    return sum(1 for _ in _binders(f))


def _binders(f):
    if isinstance(f, Quant):
        yield f
        for t in f.bounds:
            yield from _binders(t)
        yield from _binders(f.body)
    elif isinstance(f, Comp):
        yield f
        yield from _binders(f.bound)
        yield from _binders(f.body)
    elif isinstance(f, Not):
        yield from _binders(f.body)
    elif isinstance(f, BINARY):
        yield from _binders(f.left)
        yield from _binders(f.right)
    elif isinstance(f, Mem):
        yield from _binders(f.left)
        yield from _binders(f.right)


def _eq_sides(E):
    if isinstance(E, Eq):
        return E.left, E.right
    E = expand(E)
    if (isinstance(E, And) and _q(E.left, "all", "in") and _q(E.right, "all", "in")
            and isinstance(E.left.body, Mem) and isinstance(E.right.body, Mem)):
        a, b = E.left.bounds[0], E.right.bounds[0]
        if E.left.body == Mem(Var(E.left.var), b) and E.right.body == Mem(Var(E.right.var), a):
            return a, b
    return None


def _extract(schema: str, S):
    """Candidate argument list for ``schema`` read off formula ``S``."""
    if schema == "Logical":
        return [S]
    if schema == "Infinity":
        return []
    if schema in ("Pair", "Union", "PowerSet", "Exponentiation"):
        if not _q(S, "ex", "U"):
            return None
        body, z = S.body, S.var
        if schema == "Pair":
            if isinstance(body, And) and isinstance(body.left, Mem) and isinstance(body.right, Mem):
                return [body.left.left, body.right.left]
            return None
        if schema == "Union":
            return [body.bounds[0]] if _q(body, "all", "in") else None
        if schema == "PowerSet":
            return [body.bounds[0]] if _q(body, "all", "sub") else None
        return list(body.bounds) if _q(body, "all", "exp") else None
    if schema == "Separation":
        if not (_q(S, "ex", "U") and isinstance(S.body, And) and _q(S.body.left, "all", "in")):
            return None
        inner = S.body.left.body
        if not (isinstance(inner, And) and isinstance(inner.left, Mem)):
            return None
        x = S.body.left.var
        return [inner.left.right, Var(x), inner.right]
    if schema == "Collection":
        if not (isinstance(S, Imp) and _q(S.left, "all", "in") and _q(S.left.body, "ex", "U")):
            return None
        x, y = S.left.var, S.left.body.var
        if x == y:
            return None
        return [S.left.bounds[0], Var(x), Var(y), S.left.body.body]
    if schema == "SetInduction":
        if not (isinstance(S, Imp) and _q(S.right, "all", "U")):
            return None
        return [Var(S.right.var), S.right.body]
    if schema == "Extensionality":
        if not (isinstance(S, Imp) and isinstance(S.left, And)):
            return None
        sides = _eq_sides(S.left.left)
        if sides is None:
            return None
        a, b = sides
        B1, B2 = S.left.right, S.right
        hole = fresh_name("u", free_vars(B1) | free_vars(B2) | term_free_vars(a) | term_free_vars(b))
        B = _antiunify(B1, B2, a, b, hole)
        if B is None:
            B = _antiunify(*_canon_pair(B1, B2, {hole}), a, b, hole)
        if B is None:
            return None
        return [a, b, Var(hole), B]
    return None


def axiom_arguments(schema: str, S):
    """The argument list that reproduces succedent ``S`` as an instance of
    ``schema``, or None if ``S`` does not have the schema's shape."""
    return _extract(schema, S)


def match_axiom(schema: str, seq: Sequent, theory: Theory | str) -> str | None:
    """``None`` if ``seq`` is an instance of ``schema`` in ``theory``,
    otherwise a reason."""
    theory = Theory.parse(theory)
    if schema not in AXIOMS:
        return f"unknown rule {schema!r}"
    if theory not in AXIOMS[schema]:
        return f"{schema} is not an axiom of {theory.label}"
    if len(seq.delta) != 1:
        return f"{schema} needs exactly one succedent formula"
    S = seq.delta[0]
    if schema == "Logical":
        if alpha_key(S) not in seq.gamma_keys():
            return "logical axiom: succedent does not occur in the antecedent"
        if not is_delta0(S):
            return "not Delta0: logical axioms are restricted to Delta0 formulas"
        return None
    args = _extract(schema, S)
    if args is None:
        return f"succedent does not have the shape of {schema}"
    try:
        expected = axiom_formula(schema, args)
    except ClassViolation as exc:
        return f"not Delta0: {exc}"
    except (ValueError, TypeError) as exc:
        return f"{schema}: {exc}"
    if not _same(expected, S):
        return f"succedent is not an instance of {schema}"
    return None
