"""Points on a conic: case classification, type enumeration, and the
closed-form first differences for simple and double points.

Up to relabelling, r points on a conic fall into four cases: on an
irreducible conic with no negative square <= -2 class (I, r <= 5) or with
the conic class itself negative (II, r >= 6), or on two lines carrying a
and b of the points (a <= b, a + b = r + eps, with eps = 1 when the
intersection of the lines is one of the points): two line classes when
a >= 3 (III), one when a < 3 <= b (IV, where eps may be taken 0).
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import CONIC
from .configtype import ConfigurationType, validate
from .errors import RangeError
from .lattice import DivisorClass

_CASES = ("I", "II", "III", "IV")


@dataclass(frozen=True)
class ConicCase:
    case: str
    r: int
    a: int = 0
    b: int = 0
    eps: int = 0

    def __post_init__(self):
        if self.case not in _CASES:
            raise RangeError(f"unknown conic case {self.case!r}")
        r, a, b, eps = self.r, self.a, self.b, self.eps
        if r < 2:
            raise RangeError("conic mode needs r >= 2")
        if self.case == "I":
            if r > 5:
                raise RangeError("an irreducible conic through more than 5 points "
                                 "makes the conic class negative (case II)")
        elif self.case == "II":
            if r <= 5:
                raise RangeError("case II requires r > 5")
        else:
            if eps not in (0, 1):
                raise RangeError("eps must be 0 or 1")
            if a > b:
                raise RangeError("two-line cases are normalised to a <= b")
            if a + b != r + eps:
                raise RangeError(f"need a + b = r + eps, got {a}+{b} != {r}+{eps}")
            if self.case == "III":
                if a < 3:
                    raise RangeError("case III requires a >= 3")
            else:
                if not (a < 3 <= b):
                    raise RangeError("case IV requires a < 3 <= b")
                if eps != 0:
                    raise RangeError("case IV with eps = 1 duplicates a smaller-a "
                                     "eps = 0 case; use that form")

    def describe(self) -> str:
        if self.case == "I":
            return f"{self.r} points on an irreducible conic"
        if self.case == "II":
            return f"{self.r} points on an irreducible conic (negative conic class)"
        shared = "sharing the intersection point" if self.eps else "avoiding the intersection point"
        return f"{self.r} points on two lines ({self.a} and {self.b}, {shared})"

    def to_json(self) -> dict:
        return {"case": self.case, "r": self.r, "a": self.a, "b": self.b, "eps": self.eps}


def conic_neg(c: ConicCase) -> ConfigurationType:
    """The negative classes (square <= -2) of the case, on labelled points.

    Two-line cases put the a-line on points 1..a; with eps = 1 the shared
    point is point 1.
    """
    r = c.r
    if c.case == "I":
        return validate([], r, mode=CONIC)
    if c.case == "II":
        return validate([DivisorClass(2, (1,) * r)], r, mode=CONIC)
    if c.case == "IV":
        mults = tuple(1 if i < c.b else 0 for i in range(r))
        return validate([DivisorClass(1, mults)], r, mode=CONIC)
    first = tuple(1 if i < c.a else 0 for i in range(r))
    if c.eps == 0:
        second = tuple(1 if i >= c.a else 0 for i in range(r))
    else:
        second = tuple(1 if (i == 0 or i >= c.a) else 0 for i in range(r))
    classes = [DivisorClass(1, first), DivisorClass(1, second)]
    # with a line of fewer than 3 points the class is not negative enough
    classes = [cl for cl in classes if sum(cl.mults) >= 3]
    return validate(classes, r, mode=CONIC)


def enumerate_conic_types(r: int) -> tuple[ConicCase, ...]:
    """All conic-mode configuration types for r points, deduplicated.

    The identifications (a=2, eps=1) ~ (a=1, eps=0) and
    (a=1, eps=1) ~ (a=0, eps=0) are built in: eps = 1 is only emitted for
    a >= 3.
    """
    if r < 2:
        raise RangeError("conic mode needs r >= 2")
    cases = []
    if r <= 5:
        cases.append(ConicCase("I", r))
    else:
        cases.append(ConicCase("II", r))
    for a in (0, 1, 2):
        b = r - a
        if 3 <= b and a < b:
            cases.append(ConicCase("IV", r, a, b, 0))
    for eps in (0, 1):
        for a in range(3, (r + eps) // 2 + 1):
            b = r + eps - a
            if b >= a:
                cases.append(ConicCase("III", r, a, b, eps))
    return tuple(cases)


# ---------------------------------------------------------------------------
# closed-form first differences
# ---------------------------------------------------------------------------

def _blocks(*pairs) -> tuple[int, ...]:
    out = []
    for value, count in pairs:
        if count < 0:
            raise AssertionError("negative block length; parameters out of range")
        out.extend([value] * count)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _collinear_m2(r: int) -> tuple[int, ...]:
    return _blocks((1, 1), (2, r), (1, r - 1))


def _irreducible_m2(r: int) -> tuple[int, ...]:
    if r == 3:
        return (1, 2, 3, 3)
    if r == 4:
        return (1, 2, 3, 4, 2)
    if r % 2:
        return _blocks((1, 1), (2, 1), (3, 1), (4, (r - 1) // 2),
                       (2, (r - 5) // 2), (1, 1))
    return _blocks((1, 1), (2, 1), (3, 1), (4, r // 2 - 1), (3, 1),
                   (2, (r - 6) // 2), (1, 1))


def _two_lines_m2(a: int, b: int, eps: int) -> tuple[int, ...]:
    head = ((1, 1), (2, 1), (3, 1))
    if eps == 0:
        if a == 0:
            return _collinear_m2(b)
        if 2 * a < b:
            return _blocks(*head, (4, a), (3, a - 1), (2, b - 2 * a - 1), (1, b - 1))
        if a < b < 2 * a:
            return _blocks(*head, (4, a), (3, b - a - 1), (2, 2 * a - b - 1),
                           (1, 2 * b - 2 * a - 1))
        if b == 2 * a:
            return _blocks(*head, (4, a), (3, a - 2), (2, 1), (1, 2 * (a - 1)))
        return _blocks(*head, (4, a - 1), (3, 1), (2, a - 3), (1, 1))  # b == a >= 3
    if a == b:
        return _blocks(*head, (4, a - 2), (3, 1), (2, a - 2))
    if b <= 2 * a - 1:
        return _blocks(*head, (4, a - 1), (3, b - a - 1), (2, 2 * a - b - 1),
                       (1, 2 * (b - a)))
    return _blocks(*head, (4, a - 1), (3, a - 2), (2, b - 2 * a + 1), (1, b - 1))


def _two_lines_m1(a: int, b: int, eps: int) -> tuple[int, ...]:
    if eps == 0:
        if a == b:
            return _blocks((1, 1), (2, a - 1), (1, 1))
        return _blocks((1, 1), (2, a), (1, b - a - 1))
    return _blocks((1, 1), (2, a - 1), (1, b - a))


def _irreducible_m1(r: int) -> tuple[int, ...]:
    values = []
    t = 0
    while True:
        values.append(min(2 * t + 1, r))
        if values[-1] == r:
            break
        t += 1
    return tuple(v - (values[i - 1] if i else 0) for i, v in enumerate(values))


def delta_h_closed_form(c: ConicCase, m: int) -> tuple[int, ...]:
    """First difference of the Hilbert function of the scheme of all r
    points taken with multiplicity m (m = 1 or 2), by case formulas."""
    if m not in (1, 2):
        raise RangeError("closed forms cover m in {1, 2} only")
    if c.case in ("I", "II"):
        if m == 1:
            return _irreducible_m1(c.r)
        return _collinear_m2(c.r) if c.r == 2 else _irreducible_m2(c.r)
    a, b, eps = c.a, c.b, c.eps
    if m == 1:
        if a == 0:
            return _blocks((1, 1), (1, b - 1))
        return _two_lines_m1(a, b, eps)
    return _two_lines_m2(a, b, eps)
