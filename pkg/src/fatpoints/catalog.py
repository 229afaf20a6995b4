"""Finite families of candidate negative classes.

For r <= 8 points the classes of reduced irreducible curves of negative
self-intersection on the blow-up are confined to five explicit families:

* exceptional classes ``E_i``
* line classes ``L - E_{i1} - ... - E_{ij}`` for ``j >= 2``
* conic classes ``2L - E_{i1} - ... - E_{ij}`` for ``5 <= j <= r``
* singular-cubic classes ``3L - 2E_{i1} - E_{i2} - ... - E_{ij}`` for
  ``j in {7, 8}``, ``j <= r``
* three sporadic degree-4/5/6 shapes that occur only for ``r = 8``

For any number of points on a conic the corresponding list is the
exceptional classes, the line classes, and ``Q = 2L - E_1 - ... - E_r``
(present once ``r > 4``).
"""

from __future__ import annotations

from itertools import combinations
from functools import lru_cache

from .errors import RangeError
from .lattice import DivisorClass

EIGHT_POINTS = "eight_points"
CONIC = "conic"

# Materialising the full conic-mode line family costs 2^r classes; beyond
# this bound callers must rely on membership tests and the -1 sublist.
_CONIC_MATERIALISE_LIMIT = 16


def _mult_vector(r, ones=(), twos=(), threes=()):
    m = [0] * r
    for i in ones:
        m[i - 1] = 1
    for i in twos:
        m[i - 1] = 2
    for i in threes:
        m[i - 1] = 3
    return tuple(m)


def _eight_point_classes(r):
    classes = [DivisorClass(0, tuple(-1 if j == i else 0 for j in range(r)))
               for i in range(r)]
    pts = range(1, r + 1)
    for j in range(2, r + 1):
        for sub in combinations(pts, j):
            classes.append(DivisorClass(1, _mult_vector(r, ones=sub)))
    for j in range(5, r + 1):
        for sub in combinations(pts, j):
            classes.append(DivisorClass(2, _mult_vector(r, ones=sub)))
    for j in (7, 8):
        if j <= r:
            for sub in combinations(pts, j):
                for double in sub:
                    simple = tuple(i for i in sub if i != double)
                    classes.append(DivisorClass(3, _mult_vector(r, ones=simple, twos=(double,))))
    if r == 8:
        for doubles in combinations(pts, 3):
            simple = tuple(i for i in pts if i not in doubles)
            classes.append(DivisorClass(4, _mult_vector(r, ones=simple, twos=doubles)))
        for doubles in combinations(pts, 6):
            simple = tuple(i for i in pts if i not in doubles)
            classes.append(DivisorClass(5, _mult_vector(r, ones=simple, twos=doubles)))
        for triple in pts:
            doubles = tuple(i for i in pts if i != triple)
            classes.append(DivisorClass(6, _mult_vector(r, twos=doubles, threes=(triple,))))
    return classes


def _conic_classes(r):
    classes = [DivisorClass(0, tuple(-1 if j == i else 0 for j in range(r)))
               for i in range(r)]
    for j in range(2, r + 1):
        for sub in combinations(range(1, r + 1), j):
            classes.append(DivisorClass(1, _mult_vector(r, ones=sub)))
    if r > 4:
        classes.append(DivisorClass(2, (1,) * r))
    return classes


class CandidateFamily:
    """The candidate classes for one blow-up, indexed by self-intersection."""

    def __init__(self, r: int, mode: str, classes):
        self.r = r
        self.mode = mode
        self.classes = tuple(sorted(classes, key=lambda c: c.vec))
        self._set = frozenset(self.classes)
        by_sq: dict[int, list[DivisorClass]] = {}
        for c in self.classes:
            by_sq.setdefault(c.self_intersection(), []).append(c)
        self.by_self_intersection = {k: tuple(v) for k, v in sorted(by_sq.items())}

    def __contains__(self, c: DivisorClass) -> bool:
        return c.r == self.r and c in self._set

    def __iter__(self):
        return iter(self.classes)

    def __len__(self):
        return len(self.classes)

    def square_at_most(self, bound: int):
        """All candidates with self-intersection <= bound."""
        return tuple(c for sq, group in self.by_self_intersection.items()
                     if sq <= bound for c in group)

    def minus_one_classes(self):
        return self.by_self_intersection.get(-1, ())


def _is_conic_candidate_shape(c: DivisorClass) -> bool:
    if c.d == 0:
        return sorted(c.mults) == [-1] + [0] * (c.r - 1)
    if c.d == 1:
        return set(c.mults) <= {0, 1} and sum(c.mults) >= 2
    if c.d == 2:
        return c.r > 4 and all(m == 1 for m in c.mults)
    return False


@lru_cache(maxsize=None)
def negative_candidates(r: int, mode: str = EIGHT_POINTS) -> CandidateFamily:
    """The full candidate family for r points in the given mode."""
    if mode == EIGHT_POINTS:
        if not 2 <= r <= 8:
            raise RangeError(f"eight-point mode supports 2 <= r <= 8, got r={r}")
        return CandidateFamily(r, mode, _eight_point_classes(r))
    if mode == CONIC:
        if r < 2:
            raise RangeError(f"conic mode supports r >= 2, got r={r}")
        if r > _CONIC_MATERIALISE_LIMIT:
            raise RangeError(
                f"conic candidate family for r={r} is too large to materialise; "
                "validation and completion work directly on class shapes")
        return CandidateFamily(r, mode, _conic_classes(r))
    raise RangeError(f"unknown mode {mode!r}")


def is_candidate(c: DivisorClass, r: int, mode: str) -> bool:
    """Membership test that avoids materialising large conic families."""
    if c.r != r:
        return False
    if mode == CONIC:
        return _is_conic_candidate_shape(c)
    return c in negative_candidates(r, mode)


def minus_one_candidates(r: int, mode: str):
    """The square -1 candidates, cheap to list in either mode.

    These are the classes that completion may adjoin to a type.  In conic
    mode they are the E_i, the two-point line classes, and Q when r = 5.
    """
    if mode == EIGHT_POINTS:
        if r == 1:
            return (DivisorClass(0, (-1,)),)
        return negative_candidates(r, mode).minus_one_classes()
    if r < 2:
        raise RangeError("conic mode needs r >= 2")
    classes = [DivisorClass(0, tuple(-1 if j == i else 0 for j in range(r)))
               for i in range(r)]
    for sub in combinations(range(1, r + 1), 2):
        classes.append(DivisorClass(1, _mult_vector(r, ones=sub)))
    if r == 5:
        classes.append(DivisorClass(2, (1,) * r))
    return tuple(sorted(classes, key=lambda c: c.vec))


def square_at_most(family: CandidateFamily, bound: int):
    return family.square_at_most(bound)
