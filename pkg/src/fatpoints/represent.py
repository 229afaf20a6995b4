"""Integer linear algebra for representability: Smith normal form, the
torsion of the orthogonal complement of the canonical class modulo a
type's classes, and the stored representability verdicts.

The verdicts themselves are classification data (they depend on geometric
arguments such as quadratic transformations that this package does not
re-run); the torsion computation provides the lattice-theoretic evidence
and is cross-checked against them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .configtype import ConfigurationType
from .errors import InvalidTypeError, RangeError, TableLookupError
from .lattice import DivisorClass, canonical_class, intersect


def smith_normal_form(matrix):
    """Diagonalise an integer matrix by unimodular row/column operations.

    Returns (diagonal, U, V) with U * M * V diagonal, the diagonal entries
    forming a divisibility chain (trailing zeros allowed), and U, V
    unimodular.  Pivots are chosen by minimal absolute value; all
    arithmetic is on arbitrary-precision integers.
    """
    m = [list(map(int, row)) for row in matrix]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    u = [[int(i == j) for j in range(nr)] for i in range(nr)]
    v = [[int(i == j) for j in range(nc)] for i in range(nc)]

    def swap_rows(i, j):
        if i != j:
            m[i], m[j] = m[j], m[i]
            u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        if i != j:
            for row in m:
                row[i], row[j] = row[j], row[i]
            for row in v:
                row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):
        # row dst += c * row src
        m[dst] = [a + c * b for a, b in zip(m[dst], m[src])]
        u[dst] = [a + c * b for a, b in zip(u[dst], u[src])]

    def add_col(src, dst, c):
        for row in m:
            row[dst] += c * row[src]
        for row in v:
            row[dst] += c * row[src]

    def negate_row(i):
        m[i] = [-a for a in m[i]]
        u[i] = [-a for a in u[i]]

    k = 0
    while k < min(nr, nc):
        piv = None
        for i in range(k, nr):
            for j in range(k, nc):
                if m[i][j] and (piv is None or abs(m[i][j]) < abs(m[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(k, piv[0])
        swap_cols(k, piv[1])
        while True:
            # reduce the pivot row and column; remainders become new pivots
            for i in range(k + 1, nr):
                if m[i][k]:
                    add_row(k, i, -(m[i][k] // m[k][k]))
            for j in range(k + 1, nc):
                if m[k][j]:
                    add_col(k, j, -(m[k][j] // m[k][k]))
            nz = ([(i, k) for i in range(k + 1, nr) if m[i][k]]
                  + [(k, j) for j in range(k + 1, nc) if m[k][j]])
            if nz:
                i, j = min(nz, key=lambda ij: abs(m[ij[0]][ij[1]]))
                if j == k:
                    swap_rows(k, i)
                else:
                    swap_cols(k, j)
                continue
            # the pivot must divide the remaining submatrix for the chain
            offender = None
            for i in range(k + 1, nr):
                if any(m[i][j] % m[k][k] for j in range(k + 1, nc)):
                    offender = i
                    break
            if offender is None:
                break
            add_row(offender, k, 1)
        if m[k][k] < 0:
            negate_row(k)
        k += 1
    diag = tuple(m[i][i] for i in range(min(nr, nc)))
    return diag, u, v


def invariant_factors(matrix) -> tuple[int, ...]:
    """The nonzero diagonal of the Smith normal form."""
    diag, _, _ = smith_normal_form(matrix)
    return tuple(d for d in diag if d)


@dataclass(frozen=True)
class FinAbGroup:
    """A finitely generated abelian group in invariant-factor form."""

    invariant_factors: tuple[int, ...]   # each >= 2, divisibility chain
    free_rank: int

    def __post_init__(self):
        for a, b in zip(self.invariant_factors, self.invariant_factors[1:]):
            if b % a:
                raise ValueError("invariant factors must form a divisibility chain")
        if any(f < 2 for f in self.invariant_factors):
            raise ValueError("invariant factors are the diagonal entries >= 2")

    @property
    def torsion_order(self) -> int:
        n = 1
        for f in self.invariant_factors:
            n *= f
        return n

    def is_square_free(self) -> bool:
        n = self.torsion_order
        d = 2
        while d * d <= n:
            if n % (d * d) == 0:
                return False
            while n % d == 0:
                n //= d
            d += 1
        return True

    def to_json(self):
        return {"invariant_factors": list(self.invariant_factors),
                "free_rank": self.free_rank}


def kperp_basis(r: int):
    """Basis E_1-E_2, ..., E_{r-1}-E_r, L-E_1-E_2-E_3 of the orthogonal
    complement of the canonical class (r >= 3)."""
    if r < 3:
        raise RangeError("the fixed orthogonal-complement basis needs r >= 3")
    basis = []
    for i in range(r - 1):
        mults = [0] * r
        mults[i], mults[i + 1] = -1, 1
        basis.append(DivisorClass(0, tuple(mults)))
    basis.append(DivisorClass(1, tuple(1 if i < 3 else 0 for i in range(r))))
    return basis


def kperp_coordinates(c: DivisorClass) -> tuple[int, ...]:
    """Coordinates of a class orthogonal to K in the fixed basis."""
    r = c.r
    if intersect(c, canonical_class(r)) != 0:
        raise InvalidTypeError(
            f"class {c!r} does not pair to zero with the canonical class")
    coeff_l = c.d
    resid = [m - coeff_l * (1 if i < 3 else 0) for i, m in enumerate(c.mults)]
    # E_i - E_{i+1} has mults (-1, +1); negated prefix sums solve the chain
    coords = []
    acc = 0
    for i in range(r - 1):
        acc -= resid[i]
        coords.append(acc)
    if acc != resid[r - 1]:
        raise InvalidTypeError(f"class {c!r} is not in the span of the fixed basis")
    return tuple(coords) + (coeff_l,)


def torsion(t: ConfigurationType) -> FinAbGroup:
    """Torsion of K-perp modulo the span of the type's classes.

    Requires every class of the type to be orthogonal to the canonical
    class (three-point lines, six-point conics, the eight-point singular
    cubic); otherwise the quotient is not defined in the fixed basis.
    """
    r = t.r
    classes = t.sorted_classes
    if not classes:
        return FinAbGroup((), r)
    rows = [kperp_coordinates(c) for c in classes]
    diag, _, _ = smith_normal_form(rows)
    nonzero = [d for d in diag if d]
    return FinAbGroup(tuple(d for d in nonzero if d > 1), r - len(nonzero))


# ---------------------------------------------------------------------------
# stored verdicts
# ---------------------------------------------------------------------------

ALWAYS = "always"
ONLY_CHAR = "only_char"
EXCEPT_CHAR = "except_char"
NEVER = "never"

_R7_SPECIAL = {23: (EXCEPT_CHAR, 2), 24: (ONLY_CHAR, 2)}
_R8_SPECIAL = {i: (EXCEPT_CHAR, 2) for i in (23, 31, 44, 90, 112, 128, 131)}
_R8_SPECIAL.update({i: (ONLY_CHAR, 2) for i in (46, 130)})
_R8_SPECIAL.update({i: (NEVER, None) for i in (30, 45, 96)})


@dataclass(frozen=True)
class RepresentabilityVerdict:
    r: int
    index: int
    kind: str                 # always / only_char / except_char / never
    p: int | None             # the characteristic for the char-dependent kinds
    source: str

    def allows_characteristic(self, char: int) -> bool:
        if self.kind == ALWAYS:
            return True
        if self.kind == NEVER:
            return False
        if self.kind == ONLY_CHAR:
            return char == self.p
        return char != self.p

    def to_json(self):
        return {"r": self.r, "index": self.index, "verdict": self.kind,
                "p": self.p, "source": self.source}


def representability(r: int, index: int) -> RepresentabilityVerdict:
    """The stored classification verdict for a table row."""
    from .configtype import enumerate_types
    n = len(enumerate_types(r))
    if not 1 <= index <= n:
        raise TableLookupError(f"no type with index {index} for r={r}")
    if r <= 6:
        kind, p = ALWAYS, None
    elif r == 7:
        kind, p = _R7_SPECIAL.get(index, (ALWAYS, None))
    else:
        kind, p = _R8_SPECIAL.get(index, (ALWAYS, None))
    return RepresentabilityVerdict(r, index, kind, p,
                                   source="classification of plane configurations "
                                          "of at most eight points")
