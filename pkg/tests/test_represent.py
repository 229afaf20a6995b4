import random

import pytest

from fatpoints.configtype import builtin
from fatpoints.errors import InvalidTypeError, TableLookupError
from fatpoints.lattice import DivisorClass
from fatpoints.represent import (FinAbGroup, kperp_basis, kperp_coordinates,
                                 representability, smith_normal_form, torsion)

# the nonzero torsion groups among the first 32 eight-point types, as
# computed by the engine (the published proof list transposes 11 and 13;
# the complete quadrilateral in type 11 carries the order-2 class)
NONZERO_TORSION = {11: (2,), 16: (2,), 19: (2,), 24: (2,), 25: (2,), 29: (2,),
                   23: (2, 2), 31: (2, 2), 30: (2, 2, 2),
                   27: (3,), 28: (3,), 32: (3, 3)}


def _matmul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def _det(m):
    if len(m) == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * _det([row[:j] + row[j + 1:] for row in m[1:]])
               for j in range(len(m)))


def test_snf_identity():
    diag, u, v = smith_normal_form([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert diag == (1, 1, 1)


def test_snf_scrambled_diagonal():
    # start from diag(2, 4) and mix it with unimodular moves
    m = [[2, 0], [0, 4]]
    m = [[m[0][0] + 3 * m[1][0], m[0][1] + 3 * m[1][1]], m[1]]
    m = [[m[0][0], m[0][1] + m[0][0]], [m[1][0], m[1][1] + m[1][0]]]
    diag, u, v = smith_normal_form(m)
    assert diag == (2, 4)


def test_snf_transforms_and_chain():
    rng = random.Random(6)
    for _ in range(40):
        nr, nc = rng.randint(1, 5), rng.randint(1, 5)
        m = [[rng.randint(-9, 9) for _ in range(nc)] for _ in range(nr)]
        diag, u, v = smith_normal_form(m)
        product = _matmul(_matmul(u, m), v)
        for i in range(nr):
            for j in range(nc):
                assert product[i][j] == (diag[i] if i == j and i < len(diag) else 0)
        assert abs(_det(u)) == 1 and abs(_det(v)) == 1
        nonzero = [d for d in diag if d]
        for a, b in zip(nonzero, nonzero[1:]):
            assert b % a == 0
        assert all(d >= 0 for d in diag)


def test_kperp_coordinates_round_trip():
    for r in (3, 6, 8):
        basis = kperp_basis(r)
        assert len(basis) == r
        rng = random.Random(r)
        for _ in range(20):
            coeffs = [rng.randint(-4, 4) for _ in range(r)]
            total = DivisorClass(0, (0,) * r)
            for c, b in zip(coeffs, basis):
                total = total + c * b
            assert list(kperp_coordinates(total)) == coeffs


def test_torsion_regression_types_1_to_32():
    for i in range(1, 33):
        group = torsion(builtin(8, i))
        assert group.invariant_factors == NONZERO_TORSION.get(i, ()), i


def test_quadrilateral_torsion_direct():
    # the four lines of type 11 sum to twice the six-point conic class,
    # which is not an integral combination of them
    t = builtin(8, 11)
    rows = [kperp_coordinates(c) for c in t.sorted_classes]
    q = DivisorClass(2, (1, 1, 1, 1, 1, 1, 0, 0))
    qc = kperp_coordinates(q)
    twice = tuple(2 * x for x in qc)
    assert torsion(t).invariant_factors == (2,)
    # sanity: 2q is the sum of the four rows
    assert twice == tuple(sum(col) for col in zip(*rows))


def test_torsion_empty_type():
    g = torsion(builtin(8, 1))
    assert g.invariant_factors == () and g.free_rank == 8


def test_torsion_requires_anticanonical_orthogonal():
    with pytest.raises(InvalidTypeError):
        torsion(builtin(8, 113))    # a four-point line does not pair to zero


def test_torsion_basis_independence():
    # recompute in a different basis of the same lattice
    def alt_coordinates(c):
        r = c.r
        coeff = c.d
        resid = [m - coeff * (1 if i in (0, 1, 3) else 0) for i, m in enumerate(c.mults)]
        coords = []
        acc = 0
        for i in range(r - 1):
            acc -= resid[i]
            coords.append(acc)
        assert acc == resid[r - 1]
        return tuple(coords) + (coeff,)

    for idx in (11, 23, 27, 30, 32, 40, 96):
        t = builtin(8, idx)
        rows = [alt_coordinates(c) for c in t.sorted_classes]
        diag, _, _ = smith_normal_form(rows)
        alt = tuple(d for d in diag if d > 1)
        assert alt == torsion(t).invariant_factors


def test_square_free_torsion_implies_representable():
    for i in range(1, 97):
        t = builtin(8, i)
        try:
            group = torsion(t)
        except InvalidTypeError:
            continue
        verdict = representability(8, i)
        if group.is_square_free():
            assert verdict.kind != "never", i


def test_verdicts():
    assert representability(8, 96).kind == "never"
    assert representability(8, 46).kind == "only_char"
    assert representability(8, 46).p == 2
    assert representability(7, 5).kind == "always"
    assert representability(7, 23).kind == "except_char"
    assert representability(7, 24).kind == "only_char"
    assert representability(6, 10).kind == "always"
    for i in (23, 31, 44, 90, 112, 128, 131):
        assert representability(8, i).kind == "except_char"
    with pytest.raises(TableLookupError):
        representability(8, 147)


def test_verdict_characteristic_logic():
    v = representability(8, 46)
    assert v.allows_characteristic(2) and not v.allows_characteristic(0)
    v = representability(8, 23)
    assert v.allows_characteristic(0) and not v.allows_characteristic(2)
    v = representability(8, 30)
    assert not any(v.allows_characteristic(c) for c in (0, 2, 3, 5))


def test_finab_group_validation():
    with pytest.raises(ValueError):
        FinAbGroup((2, 3), 0)     # 3 is not a multiple of 2
    g = FinAbGroup((2, 4), 1)
    assert g.torsion_order == 8 and not g.is_square_free()
