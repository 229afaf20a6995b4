"""Divisor classes on a blow-up of the plane, with exact integer arithmetic.

The class group of the blow-up of P^2 at r labelled points has basis
L, E_1, ..., E_r with the diagonal pairing L^2 = 1, E_i^2 = -1 and mixed
products 0.  A class is stored as ``(d; m_1, ..., m_r)`` and denotes
``d*L - m_1*E_1 - ... - m_r*E_r``, so E_i itself is the vector with d = 0
and m_i = -1.
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Sequence

from .errors import DimensionError, RangeError

# All arithmetic is on Python ints (exact); the bound keeps pairings within
# int64 range so that vectorised loops elsewhere may use numpy safely.
COEFF_BOUND = 1 << 30


class DivisorClass:
    """Immutable integer vector (d; m_1..m_r) in the Picard lattice."""

    __slots__ = ("d", "mults")

    def __init__(self, d: int, mults: Iterable[int]):
        mults = tuple(mults)
        if not isinstance(d, int) or not all(isinstance(m, int) for m in mults):
            raise TypeError("divisor class coefficients must be integers")
        if abs(d) > COEFF_BOUND or any(abs(m) > COEFF_BOUND for m in mults):
            raise OverflowError("divisor class coefficient exceeds supported bound")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "mults", mults)

    def __setattr__(self, name, value):
        raise AttributeError("DivisorClass is immutable")

    @property
    def r(self) -> int:
        return len(self.mults)

    @property
    def vec(self) -> tuple[int, ...]:
        return (self.d,) + self.mults

    def dot(self, other: "DivisorClass") -> int:
        return intersect(self, other)

    def self_intersection(self) -> int:
        return intersect(self, self)

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        _check_same_r(self, other)
        return DivisorClass(self.d + other.d,
                            tuple(a + b for a, b in zip(self.mults, other.mults)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        _check_same_r(self, other)
        return DivisorClass(self.d - other.d,
                            tuple(a - b for a, b in zip(self.mults, other.mults)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-self.d, tuple(-m for m in self.mults))

    def __mul__(self, n: int) -> "DivisorClass":
        if not isinstance(n, int):
            return NotImplemented
        return DivisorClass(n * self.d, tuple(n * m for m in self.mults))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.d == 0 and not any(self.mults)

    def __eq__(self, other) -> bool:
        return (isinstance(other, DivisorClass)
                and self.d == other.d and self.mults == other.mults)

    def __lt__(self, other: "DivisorClass") -> bool:
        return self.vec < other.vec

    def __le__(self, other: "DivisorClass") -> bool:
        return self.vec <= other.vec

    def __hash__(self) -> int:
        return hash(self.vec)

    def __repr__(self) -> str:
        return f"DivisorClass({self.d}; {', '.join(map(str, self.mults))})"

    def to_json(self) -> list[int]:
        return [self.d, *self.mults]

    @classmethod
    def from_json(cls, data: Sequence[int]) -> "DivisorClass":
        if len(data) < 1:
            raise ValueError("class vector needs at least the L coefficient")
        return cls(int(data[0]), [int(m) for m in data[1:]])


def _check_same_r(a: DivisorClass, b: DivisorClass) -> None:
    if a.r != b.r:
        raise DimensionError(f"classes live on different blow-ups: r={a.r} vs r={b.r}")


def intersect(a: DivisorClass, b: DivisorClass) -> int:
    """Intersection pairing a.d*b.d - sum_i a.m_i*b.m_i."""
    _check_same_r(a, b)
    return a.d * b.d - sum(x * y for x, y in zip(a.mults, b.mults))


def zero(r: int) -> DivisorClass:
    return DivisorClass(0, (0,) * r)


def line(r: int) -> DivisorClass:
    """The pullback L of a general line."""
    return DivisorClass(1, (0,) * r)


def exceptional(r: int, i: int) -> DivisorClass:
    """The exceptional class E_i (1-based index)."""
    if not 1 <= i <= r:
        raise RangeError(f"exceptional index {i} out of range for r={r}")
    return DivisorClass(0, tuple(-1 if j == i else 0 for j in range(1, r + 1)))


def line_through(r: int, indices: Iterable[int]) -> DivisorClass:
    """The class L - sum of E_i over the given 1-based point indices."""
    idx = set(indices)
    if not idx <= set(range(1, r + 1)):
        raise RangeError(f"point indices {sorted(idx)} out of range for r={r}")
    return DivisorClass(1, tuple(1 if i in idx else 0 for i in range(1, r + 1)))


def canonical_class(r: int) -> DivisorClass:
    """K = -3L + E_1 + ... + E_r."""
    if r < 0:
        raise RangeError("r must be nonnegative")
    return DivisorClass(-3, (-1,) * r)


def ample_reference(r: int) -> DivisorClass:
    """The ample class A_r = (r-2)L - K = (r+1)L - E_1 - ... - E_r.

    It pairs strictly positively with every candidate negative class,
    which is what makes the decomposition loop terminate.
    """
    if r < 2:
        raise RangeError("the ample reference class requires r >= 2; "
                         "blow-ups at 0 or 1 points use ad hoc rules")
    return DivisorClass(r + 1, (1,) * r)


def fat_point_class(mults: Sequence[int], t: int) -> DivisorClass:
    """The class t*L - m_1*E_1 - ... - m_r*E_r cut out by degree-t curves."""
    if any(m < 0 for m in mults):
        raise ValueError("multiplicities must be nonnegative")
    return DivisorClass(t, tuple(int(m) for m in mults))


def riemann_roch_value(f: DivisorClass) -> int:
    """(F^2 - K.F)/2 + 1, the two-term Riemann-Roch value of the class.

    Equals h^0 for nef classes on the surfaces this package works with.
    """
    k = canonical_class(f.r)
    num = intersect(f, f) - intersect(k, f)
    if num % 2:
        raise ArithmeticError(f"odd Riemann-Roch numerator for {f!r}")
    return num // 2 + 1


def scheme_degree(mults: Sequence[int]) -> int:
    """Degree sum(binom(m_i + 1, 2)) of the fat point scheme with these mults."""
    if any(m < 0 for m in mults):
        raise ValueError("multiplicities must be nonnegative")
    return sum(comb(m + 1, 2) for m in mults)
