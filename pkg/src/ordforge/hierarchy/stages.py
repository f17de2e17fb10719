"""Finite stages of the three hierarchies.

At finite indices the constructible, von Neumann and exponentiation
hierarchies coincide.  The argument runs as follows.

* Over a finite structure every subset is definable with parameters: the
  subset ``{p_1, ..., p_k}`` is defined by ``x = p_1 | ... | x = p_k``.  So
  the definable-subsets step equals the powerset step.
* The function-space clause of the exponentiation hierarchy only adds
  functions whose pairs already lie in the previous stage.  Each such
  function is a subset of that stage and is therefore already present.

Stage ``n`` is then the set of hereditarily finite sets of rank below
``n``, which in Ackermann codes is the interval ``[0, 2^^(n-1))``.
:mod:`ordforge.hierarchy.definitions` builds the three hierarchies from
their own definitions for a cross-check.

Stages up to the enumeration cap (4 unless changed) are returned as tuples.
Stage 5 has 65536 members and is only available as a :class:`LazyStage`,
which answers membership and size queries without listing the members.
"""

from __future__ import annotations

import functools
import os

from ..errors import StageCapExceeded
from .hfset import MAX_RANK, HFSet

__all__ = [
    "DEFAULT_CAP", "HARD_CAP", "LazyStage", "stage", "stage_cap", "stage_set", "stage_size", "tower",
]

DEFAULT_CAP = 4
HARD_CAP = MAX_RANK
_ENV = "ORDFORGE_STAGE_CAP"


def tower(n: int) -> int:
    """``2^^n``: ``tower(0) = 1`` and ``tower(k + 1) = 2 ** tower(k)``."""
    t = 1
    for _ in range(n):
        t = 1 << t
    return t


def stage_size(n: int) -> int:
    """Number of members of stage ``n``."""
    if n < 0:
        raise ValueError("stage indices are non-negative")
    if n > HARD_CAP:
        raise StageCapExceeded(f"stage {n} is beyond the hard cap {HARD_CAP}")
    return 0 if n == 0 else tower(n - 1)


def stage_cap(cap: int | None = None) -> int:
    """The effective cap: ``cap`` if given, else the ``ORDFORGE_STAGE_CAP``
    environment variable, else :data:`DEFAULT_CAP`.  Never above
    :data:`HARD_CAP`."""
    if cap is None:
        raw = os.environ.get(_ENV)
        if raw is not None and raw.strip():
            try:
                cap = int(raw)
            except ValueError:
                raise ValueError(f"{_ENV} must be an integer, got {raw!r}") from None
        else:
            cap = DEFAULT_CAP
    if cap < 0:
        raise ValueError("the stage cap is non-negative")
    if cap > HARD_CAP:
        raise StageCapExceeded(f"cap {cap} is beyond the hard cap {HARD_CAP}")
    return cap


class LazyStage:
    """A stage answered by membership queries.  Iteration is refused above
    the enumeration cap of :data:`DEFAULT_CAP`."""

    __slots__ = ("index", "_bound")

    def __init__(self, index: int):
        self.index = index
        self._bound = stage_size(index)

    def __contains__(self, x: HFSet) -> bool:
        return x.code < self._bound

    def __len__(self) -> int:
        return self._bound

    def __iter__(self):
        if self.index > DEFAULT_CAP:
            raise StageCapExceeded(f"stage {self.index} supports membership queries only")
        return (HFSet(i) for i in range(self._bound))

    def as_set(self) -> HFSet:
        """The stage itself as a hereditarily finite set."""
        return HFSet((1 << self._bound) - 1)

    def __repr__(self) -> str:
        return f"LazyStage({self.index})"


@functools.lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple:
    return tuple(HFSet(i) for i in range(stage_size(n)))


def stage(n: int, cap: int | None = None):
    """Stage ``n`` as a tuple of :class:`HFSet` in increasing code order.  At
    the hard cap the result is a :class:`LazyStage`.  Raises
    :class:`StageCapExceeded` above the effective cap."""
    limit = stage_cap(cap)
    if n < 0:
        raise ValueError("stage indices are non-negative")
    if n > limit:
        raise StageCapExceeded(f"stage {n} is beyond the cap {limit}")
    if n > DEFAULT_CAP:
        return LazyStage(n)
    return _enumerate(n)


def stage_set(n: int, cap: int | None = None) -> HFSet:
    """Stage ``n`` as a single hereditarily finite set, subject to the same
    cap as :func:`stage`."""
    limit = stage_cap(cap)
    if n > limit:
        raise StageCapExceeded(f"stage {n} is beyond the cap {limit}")
    return HFSet((1 << stage_size(n)) - 1)
