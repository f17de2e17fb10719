"""Exhaustive universe of small ordinal notations.

Start from the constants 0, 1, w and W (each of size 1) and close under
``add``, ``veblen`` and ``psi``; each application adds 1 to the size.
Applications whose result leaves the notation system, or whose collapse
argument is not admissible, are skipped.  Every distinct normal form is
kept once at the smallest size that produces it.
"""

from __future__ import annotations

import functools

from ordforge.collapse import psi
from ordforge.errors import OrdforgeError
from ordforge.ordinals import OMEGA, ONE, W, ZERO, add, veblen


@functools.lru_cache(maxsize=None)
def universe_by_size(max_size: int) -> tuple:
    """``by_size[k]`` lists the notations first reached at size ``k``."""
    by_size = [[], [ZERO, ONE, OMEGA, W]]
    seen = set(by_size[1])
    for k in range(2, max_size + 1):
        fresh = []

        def keep(x):
            if x not in seen:
                seen.add(x)
                fresh.append(x)

        for a in by_size[k - 1]:
            try:
                keep(psi(a))
            except OrdforgeError:
                pass
        for i in range(1, k - 1):
            j = k - 1 - i
            for a in by_size[i]:
                for b in by_size[j]:
                    keep(add(a, b))
                    try:
                        keep(veblen(a, b))
                    except OrdforgeError:
                        pass
        by_size.append(fresh)
    return tuple(tuple(level) for level in by_size)


@functools.lru_cache(maxsize=None)
def universe(max_size: int) -> tuple:
    """Every notation of size at most ``max_size``."""
    return tuple(x for level in universe_by_size(max_size) for x in level)
