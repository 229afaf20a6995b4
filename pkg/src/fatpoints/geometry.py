"""Coordinate geometry over exact fields: curve systems through fat
points, and detection of a point set's configuration type.

The dimension of the forms of degree d vanishing to prescribed orders is
computed as binom(d+2,2) minus the rank of the condition matrix.  The
multiplicity conditions at a point come from moving it to (0:0:1) by a
linear substitution and reading off dehomogenised coefficients of low
total degree, which is valid in every characteristic (no derivatives are
involved): with the substitution x_{j1} = y0 + p_{j1} y2,
x_{j2} = y1 + p_{j2} y2, x_{i0} = p_{i0} y2 the coefficient of
y0^a y1^b in a monomial x^alpha is
C(a1,a) C(a2,b) p_{j1}^(a1-a) p_{j2}^(a2-b) p_{i0}^(a0).
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from . import configtype
from .configtype import ConfigurationType
from .errors import ConsistencyError, GeometryError
from .fields import Rationals, field_from_json, normalise_rational_triple
from .hilbert import HilbertReport
from .lattice import DivisorClass, scheme_degree


class PointSet:
    """Distinct labelled projective points over an exact field."""

    __slots__ = ("field", "points")

    def __init__(self, field, points):
        pts = []
        for p in points:
            p = tuple(p)
            if len(p) != 3:
                raise GeometryError(f"point {p!r} is not a projective triple")
            if isinstance(field, Rationals):
                pts.append(normalise_rational_triple(p))
            else:
                if all(field.sub(c, c) == c and c == field.zero for c in p):
                    raise GeometryError("projective point cannot be the zero triple")
                pts.append(_normalise_finite(field, p))
        if len(set(pts)) != len(pts):
            raise GeometryError("points must be pairwise distinct")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "points", tuple(pts))

    def __setattr__(self, name, value):
        raise AttributeError("PointSet is immutable")

    def __len__(self):
        return len(self.points)

    @property
    def r(self):
        return len(self.points)

    def subset(self, indices) -> "PointSet":
        return PointSet(self.field, [self.points[i] for i in indices])

    def to_json(self):
        return {"field": self.field.to_json(),
                "points": [[self.field.coord_str(c) for c in p] for p in self.points]}

    @classmethod
    def from_json(cls, data) -> "PointSet":
        field = field_from_json(data["field"])
        pts = [[field.parse_coord(str(c)) for c in p] for p in data["points"]]
        return cls(field, pts)

    def __repr__(self):
        return f"PointSet({self.field!r}, {len(self.points)} points)"


def _normalise_finite(field, p):
    if all(c == field.zero for c in p):
        raise GeometryError("projective point cannot be the zero triple")
    lead = next(c for c in p if c != field.zero)
    inv = field.inv(lead)
    return tuple(field.mul(inv, c) for c in p)


# ---------------------------------------------------------------------------
# exact rank
# ---------------------------------------------------------------------------

def _rank_int(rows, ncols) -> int:
    """Bareiss fraction-free elimination rank of an integer matrix.

    Every row below the pivot is rescaled each step (also when its leading
    entry is already zero); that keeps entries equal to minors of the
    input, so the division by the previous pivot is exact.
    """
    rows = [list(r) for r in rows if any(r)]
    rank = 0
    denom = 1
    for col in range(ncols):
        piv = None
        for i in range(rank, len(rows)):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pivot = rows[rank][col]
        base = rows[rank]
        for i in range(rank + 1, len(rows)):
            f = rows[i][col]
            new = []
            for v, w in zip(rows[i], base):
                q, rem = divmod(pivot * v - f * w, denom)
                if rem:
                    raise ConsistencyError("inexact division in fraction-free elimination")
                new.append(q)
            rows[i] = new
        denom = pivot
        rank += 1
        if rank == len(rows):
            break
    return rank


def _rank_field(field, rows, ncols) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, len(rows)):
            if rows[i][col] != field.zero:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = field.inv(rows[rank][col])
        rows[rank] = [field.mul(inv, v) for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != field.zero:
                f = rows[i][col]
                rows[i] = [field.sub(v, field.mul(f, w))
                           for v, w in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def _monomials(d):
    return [(a, b, d - a - b) for a in range(d + 1) for b in range(d - a + 1)]


def _condition_rows_int(point, mult, monos):
    i0 = max(i for i in range(3) if point[i] != 0)
    j1, j2 = [i for i in range(3) if i != i0]
    rows = []
    for a in range(mult):
        for b in range(mult - a):
            row = []
            for alpha in monos:
                e1, e2, e0 = alpha[j1], alpha[j2], alpha[i0]
                if a > e1 or b > e2:
                    row.append(0)
                    continue
                row.append(comb(e1, a) * comb(e2, b)
                           * point[j1] ** (e1 - a) * point[j2] ** (e2 - b)
                           * point[i0] ** e0)
            rows.append(row)
    return rows


def _condition_rows_field(field, point, mult, monos):
    i0 = max(i for i in range(3) if point[i] != field.zero)
    j1, j2 = [i for i in range(3) if i != i0]
    rows = []
    for a in range(mult):
        for b in range(mult - a):
            row = []
            for alpha in monos:
                e1, e2, e0 = alpha[j1], alpha[j2], alpha[i0]
                if a > e1 or b > e2:
                    row.append(field.zero)
                    continue
                v = field.from_int(comb(e1, a) * comb(e2, b))
                v = field.mul(v, field.pow(point[j1], e1 - a))
                v = field.mul(v, field.pow(point[j2], e2 - b))
                v = field.mul(v, field.pow(point[i0], e0))
                row.append(v)
            rows.append(row)
    return rows


def linear_system_dim(pts: PointSet, mults, d: int) -> int:
    """Dimension of the degree-d forms vanishing to order >= m_i at each
    point.  Negative multiplicities are clamped to zero."""
    if d < 0:
        return 0
    mults = [max(0, int(m)) for m in mults]
    if len(mults) != len(pts):
        raise GeometryError(f"expected {len(pts)} multiplicities, got {len(mults)}")
    monos = _monomials(d)
    rows = []
    if isinstance(pts.field, Rationals):
        for p, m in zip(pts.points, mults):
            if m:
                rows.extend(_condition_rows_int(p, m, monos))
        rank = _rank_int(rows, len(monos))
    else:
        for p, m in zip(pts.points, mults):
            if m:
                rows.extend(_condition_rows_field(pts.field, p, m, monos))
        rank = _rank_field(pts.field, rows, len(monos))
    return len(monos) - rank


def collinear(pts: PointSet, i: int, j: int, k: int) -> bool:
    p, q, s = pts.points[i], pts.points[j], pts.points[k]
    if isinstance(pts.field, Rationals):
        det = (p[0] * (q[1] * s[2] - q[2] * s[1])
               - p[1] * (q[0] * s[2] - q[2] * s[0])
               + p[2] * (q[0] * s[1] - q[1] * s[0]))
        return det == 0
    f = pts.field
    det = f.sub(f.mul(p[0], f.sub(f.mul(q[1], s[2]), f.mul(q[2], s[1]))),
                f.mul(p[1], f.sub(f.mul(q[0], s[2]), f.mul(q[2], s[0]))))
    det = f.add(det, f.mul(p[2], f.sub(f.mul(q[0], s[1]), f.mul(q[1], s[0]))))
    return det == f.zero


# ---------------------------------------------------------------------------
# negative-curve detection
# ---------------------------------------------------------------------------

def _maximal_collinear_sets(pts: PointSet):
    r = len(pts)
    found = set()
    for i, j in combinations(range(r), 2):
        members = {i, j}
        for k in range(r):
            if k not in members and collinear(pts, i, j, k):
                members.add(k)
        if len(members) >= 3:
            found.add(frozenset(members))
    return sorted(found, key=sorted)


def _coconic_sets(pts: PointSet, lines):
    """Maximal subsets of >= 6 points on an irreducible conic."""
    r = len(pts)
    on_line = {line: True for line in lines}
    hits = []
    for size in range(6, r + 1):
        for sub in combinations(range(r), size):
            s = set(sub)
            if any(len(line & s) >= 3 for line in lines):
                continue
            if linear_system_dim(pts.subset(sub), [1] * size, 2) >= 1:
                hits.append(frozenset(sub))
    return sorted((h for h in hits if not any(h < other for other in hits)),
                  key=sorted)


def _effective_dim(pts: PointSet, mults, d: int) -> int:
    return linear_system_dim(pts, mults, d)


def _cubic_classes(pts: PointSet, lines):
    """Singular-cubic classes 3L - 2E_k - sum E_i that are prime.

    Included when the system has dimension exactly one and the class does
    not split off an exceptional class or an effective line class with an
    effective residual.
    """
    r = len(pts)
    if r != 8:
        return []
    # line classes known effective: subsets of collinear sets, or <= 2 points
    effective_line_subsets = {frozenset(s) for size in (0, 1, 2)
                              for s in combinations(range(r), size)}
    for line in lines:
        for size in range(3, len(line) + 1):
            for s in combinations(sorted(line), size):
                effective_line_subsets.add(frozenset(s))
    out = []
    for k in range(r):
        mults = [2 if i == k else 1 for i in range(r)]
        if linear_system_dim(pts, mults, 3) != 1:
            continue
        splits = False
        for i in range(r):  # remove an exceptional component E_i
            residual = list(mults)
            residual[i] += 1
            if linear_system_dim(pts, residual, 3) >= 1:
                splits = True
                break
        if not splits:
            for sub in effective_line_subsets:  # remove a line component
                residual = [m - (1 if i in sub else 0) for i, m in enumerate(mults)]
                if linear_system_dim(pts, residual, 2) >= 1:
                    splits = True
                    break
        if not splits:
            out.append(DivisorClass(3, tuple(2 if i == k else 1 for i in range(r))))
    return out


def detect_neg(pts: PointSet) -> ConfigurationType:
    """The configuration type of a point set, from its coordinates."""
    r = len(pts)
    if r > 8:
        raise GeometryError("type detection supports at most 8 points")
    lines = _maximal_collinear_sets(pts)
    classes = [DivisorClass(1, tuple(1 if i in line else 0 for i in range(r)))
               for line in lines]
    for conic_set in _coconic_sets(pts, lines):
        classes.append(DivisorClass(2, tuple(1 if i in conic_set else 0
                                             for i in range(r))))
    classes.extend(_cubic_classes(pts, lines))
    try:
        return configtype.validate(classes, r)
    except Exception as exc:  # real point data should always validate
        raise ConsistencyError(f"detected class set failed validation: {exc}") from exc


def identify_type(pts: PointSet):
    """Match a point set against the built-in tables.

    Returns (r, index, perm) where perm[j] is the 0-based input point
    corresponding to letter j of the stored table row.
    """
    detected = detect_neg(pts)
    r = detected.r
    stored = configtype.lookup_by_key(detected.canonical_key, r)
    if stored is None:
        raise ConsistencyError(
            "detected a configuration type missing from the enumeration; "
            "this indicates a bug in detection or enumeration")
    sigma_d = detected.canonical_perm
    sigma_t = stored.canonical_perm
    inv_t = [0] * r
    for j, c in enumerate(sigma_t):
        inv_t[c] = j
    perm = tuple(sigma_d[inv_t[j]] for j in range(r))
    if detected.relabel(perm).neg_classes != stored.neg_classes:
        raise ConsistencyError("relabelling mismatch between detected and stored type")
    return stored.table_id[0], stored.table_id[1], perm


def hilbert_oracle(pts: PointSet, mults) -> HilbertReport:
    """Hilbert function by direct rank computation, up to saturation.

    Independent of the lattice engine; used to cross-check it.
    """
    mults = tuple(int(m) for m in mults)
    if len(mults) != len(pts):
        raise GeometryError(f"expected {len(pts)} multiplicities, got {len(mults)}")
    if any(m < 0 for m in mults):
        raise GeometryError("multiplicities must be nonnegative")
    degree = scheme_degree(mults)
    if degree == 0:
        raise GeometryError("all multiplicities are zero")
    values = []
    d = 0
    while True:
        values.append(comb(d + 2, 2) - linear_system_dim(pts, mults, d))
        if values[-1] == degree:
            break
        if d > degree + 1:
            raise ConsistencyError("oracle failed to reach the scheme degree")
        d += 1
    return HilbertReport(mults, None, tuple(values), degree)
