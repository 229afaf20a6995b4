from hypothesis import given, strategies as st
import pytest

from fatpoints.errors import DimensionError, RangeError
from fatpoints.lattice import (DivisorClass, ample_reference, canonical_class,
                               exceptional, fat_point_class, intersect, line,
                               line_through, riemann_roch_value, scheme_degree)


def test_intersection_examples():
    a = line_through(2, [1, 2])
    assert intersect(a, a) == -1
    k8 = canonical_class(8)
    assert intersect(k8, k8) == 1
    conic = DivisorClass(2, (1, 1, 1, 1, 1, 1))
    li = DivisorClass(1, (1, 1, 1, 0, 0, 0))
    assert intersect(conic, li) == -1


def test_intersect_dimension_mismatch():
    with pytest.raises(DimensionError):
        intersect(line(3), line(4))


def test_canonical_class():
    assert canonical_class(0).vec == (-3,)
    assert canonical_class(8).self_intersection() == 1
    assert canonical_class(6).self_intersection() == 3


def test_ample_reference():
    a6 = ample_reference(6)
    assert intersect(a6, DivisorClass(2, (1,) * 6)) == 8
    a8 = ample_reference(8)
    assert intersect(a8, line_through(8, [1, 2, 3])) == 6
    a10 = ample_reference(10)
    minus_e7 = -exceptional(10, 7)
    assert intersect(a10, minus_e7) == -1
    with pytest.raises(RangeError):
        ample_reference(1)


def test_fat_point_class():
    f = fat_point_class((4, 2, 2, 2, 2, 3, 3, 2, 2, 3), 6)
    assert f.d == 6 and f.mults[0] == 4
    assert fat_point_class((0,) * 5, 0).is_zero()
    assert fat_point_class((1, 1), 1) == line_through(2, [1, 2])
    with pytest.raises(ValueError):
        fat_point_class((1, -1), 2)


def test_riemann_roch_values():
    h = DivisorClass(10, (3, 1, 1, 1, 1, 2, 2, 1, 1, 1))
    assert riemann_roch_value(h) == 47
    assert riemann_roch_value(DivisorClass(0, (0,) * 4)) == 1
    for t in range(0, 8):
        assert riemann_roch_value(DivisorClass(t, (0,) * 3)) == (t + 2) * (t + 1) // 2


def test_scheme_degree():
    assert scheme_degree((4, 2, 2, 2, 2, 3, 3, 2, 2, 3)) == 46
    assert scheme_degree((1,) * 8) == 8
    assert scheme_degree((2,) * 7) == 21


small_ints = st.integers(min_value=-40, max_value=40)


@st.composite
def classes(draw, r=6):
    return DivisorClass(draw(small_ints), tuple(draw(small_ints) for _ in range(r)))


@given(classes(), classes(), classes())
def test_bilinearity_and_symmetry(a, b, c):
    assert intersect(a + b, c) == intersect(a, c) + intersect(b, c)
    assert intersect(a, b) == intersect(b, a)


def test_basis_orthogonality():
    r = 7
    l = line(r)
    assert intersect(l, l) == 1
    for i in range(1, r + 1):
        ei = exceptional(r, i)
        assert intersect(l, ei) == 0
        assert intersect(ei, ei) == -1
        for j in range(i + 1, r + 1):
            assert intersect(ei, exceptional(r, j)) == 0


def test_ample_meets_all_candidates_positively():
    from fatpoints.catalog import negative_candidates
    for r in range(2, 9):
        a = ample_reference(r)
        assert all(intersect(a, c) > 0 for c in negative_candidates(r))


def test_json_round_trip():
    c = DivisorClass(3, (2, 1, 1, 1, 1, 1, 1, 1))
    assert DivisorClass.from_json(c.to_json()) == c
