import random

import pytest

from fatpoints.configtype import builtin
from fatpoints.errors import GeometryError
from fatpoints.fields import GF, QQ
from fatpoints.geometry import (PointSet, collinear, detect_neg, hilbert_oracle,
                                identify_type, linear_system_dim)
from fatpoints.hilbert import hilbert_function
from fatpoints.witnesses import FANO

TWO_LINES = [(1, 0, 1), (2, 0, 1), (3, 0, 1), (4, 0, 1), (5, 0, 1),
             (0, 1, 1), (0, 2, 1), (0, 3, 1), (0, 4, 1), (0, 0, 1)]
EX_MULTS = (4, 2, 2, 2, 2, 3, 3, 2, 2, 3)


def test_point_validation():
    with pytest.raises(GeometryError):
        PointSet(QQ, [(0, 0, 0), (1, 0, 0)])
    with pytest.raises(GeometryError):
        PointSet(QQ, [(1, 0, 0), (2, 0, 0)])   # proportional
    with pytest.raises(GeometryError):
        PointSet(GF(5), [(1, 0, 0), (3, 0, 0)])


def test_five_general_points_unique_conic():
    pts = PointSet(QQ, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3)])
    assert linear_system_dim(pts, [1] * 5, 2) == 1


def test_two_line_scheme_dimensions():
    pts = PointSet(QQ, TWO_LINES)
    assert linear_system_dim(pts, EX_MULTS, 12) == 47
    assert linear_system_dim(pts, EX_MULTS, 5) == 0
    assert linear_system_dim(pts, EX_MULTS, 6) == 1


def test_fano_line_dimensions_over_f2():
    pts = PointSet(GF(2), FANO)
    triples = [(i, j, k) for i in range(7) for j in range(i + 1, 7)
               for k in range(j + 1, 7) if collinear(pts, i, j, k)]
    assert len(triples) == 7    # every line of the Fano plane
    for t in triples:
        sub = pts.subset(t)
        assert linear_system_dim(sub, [1, 1, 1], 1) == 1


def test_negative_mults_are_clamped():
    pts = PointSet(QQ, [(1, 0, 0), (0, 1, 0)])
    assert linear_system_dim(pts, [1, -5], 1) == 2
    assert linear_system_dim(pts, [1, 0], -1) == 0


def test_rank_invariant_under_projective_change():
    rng = random.Random(9)
    pts = PointSet(QQ, TWO_LINES)
    base = [linear_system_dim(pts, EX_MULTS, d) for d in range(4, 9)]
    for _ in range(3):
        while True:
            m = [[rng.randint(-4, 4) for _ in range(3)] for _ in range(3)]
            det = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                   - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                   + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
            if det != 0:
                break
        moved = PointSet(QQ, [tuple(sum(m[i][j] * p[j] for j in range(3))
                                    for i in range(3)) for p in pts.points])
        assert [linear_system_dim(moved, EX_MULTS, d) for d in range(4, 9)] == base


def test_fano_identification_depends_on_characteristic():
    assert identify_type(PointSet(QQ, FANO))[:2] == (7, 23)
    assert identify_type(PointSet(GF(2), FANO))[:2] == (7, 24)


def test_identification_permutation_is_valid():
    pts = PointSet(GF(2), FANO)
    r, index, perm = identify_type(pts)
    assert sorted(perm) == list(range(7))
    detected = detect_neg(pts)
    stored = builtin(r, index)
    assert detected.relabel(perm).neg_classes == stored.neg_classes


def test_eight_general_points_over_q():
    pts = PointSet(QQ, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 4),
                        (1, 3, 9), (1, 5, 27), (2, 7, 5)])
    assert identify_type(pts)[:2] == (8, 1)


def test_six_points_on_irreducible_conic():
    # x*z = y^2 carries the rational points (1 : t : t^2)
    pts = PointSet(QQ, [(1, t, t * t) for t in (0, 1, -1, 2, 3, 5)])
    assert identify_type(pts)[:2] == (6, 11)


def test_three_collinear_points():
    pts = PointSet(QQ, [(1, 0, 1), (2, 0, 1), (3, 0, 1)])
    assert identify_type(pts)[:2] == (3, 2)


def test_two_lines_detection_matches_conic_case():
    from fatpoints.conic import ConicCase, conic_neg
    pts = PointSet(QQ, [(0, 0, 1), (1, 0, 1), (2, 0, 1), (0, 1, 1), (0, 3, 1),
                        (3, 0, 1), (0, 2, 1)])
    detected = detect_neg(pts)
    expected = conic_neg(ConicCase("III", 7, a=4, b=4, eps=1))
    assert detected.canonical_key == expected.canonical_key


def test_oracle_single_fat_point():
    from math import comb
    pts = PointSet(QQ, [(1, 2, 3)])
    for m in (1, 2, 3):
        rep = hilbert_oracle(pts, [m])
        assert rep.degree == comb(m + 1, 2)
        for t, v in enumerate(rep.values):
            assert v == comb(t + 2, 2) - (comb(t - m + 2, 2) if t >= m else 0)


def test_oracle_matches_engine_on_two_line_example():
    from fatpoints.configtype import validate
    from fatpoints.lattice import DivisorClass
    pts = PointSet(QQ, TWO_LINES)
    orc = hilbert_oracle(pts, EX_MULTS)
    l1 = DivisorClass(1, (1, 1, 1, 1, 1, 0, 0, 0, 0, 1))
    l2 = DivisorClass(1, (0, 0, 0, 0, 0, 1, 1, 1, 1, 1))
    eng = hilbert_function(validate([l1, l2], 10, mode="conic"), EX_MULTS)
    assert orc.values == eng.values


def test_detection_over_galois_field():
    field = GF(2, 2)
    pts = PointSet(field, FANO)
    # over GF(4) the same seven points still form the Fano configuration
    assert identify_type(pts)[:2] == (7, 24)


def test_fuzz_random_point_sets_identify_and_agree():
    # random (mostly degenerate) point sets over tiny fields: detection
    # must land in the enumeration and the engine must match the oracle
    rng = random.Random(42)
    trials = 0
    while trials < 40:
        p = rng.choice([3, 5, 7, 11])
        field = GF(p)
        r = rng.randint(3, 8)
        pts: list = []
        while len(pts) < r:
            cand = (rng.randrange(p), rng.randrange(p), rng.randrange(p))
            if cand == (0, 0, 0):
                continue
            try:
                pts = list(PointSet(field, pts + [cand]).points)
            except GeometryError:
                continue
        ps = PointSet(field, pts)
        rr, idx, _ = identify_type(ps)
        assert rr == r
        eng = hilbert_function(builtin(rr, idx), (2,) * r).values
        assert eng == hilbert_oracle(ps, (2,) * r).values, (p, pts, idx)
        trials += 1


def test_point_set_json_round_trip():
    pts = PointSet(GF(2, 3), [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 2, 3)])
    again = PointSet.from_json(pts.to_json())
    assert again.points == pts.points and again.field == pts.field
    rational = PointSet(QQ, [("1/2", "1/3", 1), (1, 0, 0)])
    assert rational.points[0] == (3, 2, 6)
