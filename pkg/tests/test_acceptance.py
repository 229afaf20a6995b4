"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

All assertions are exact (integer equality); the stated runtime budgets
are asserted with the criterion.  Two sub-assertions reproduce known
defects in the published source values and are expected to fail; the
analysis lives in the reviewer notes (decisions ledger) outside the
package.
"""

import random
import time
from contextlib import contextmanager

from fatpoints.configtype import builtin, enumerate_types, validate
from fatpoints.conic import conic_neg, delta_h_closed_form, enumerate_conic_types
from fatpoints.fields import GF, QQ
from fatpoints.geometry import PointSet, hilbert_oracle, identify_type
from fatpoints.hilbert import hilbert_function, uniform_partition
from fatpoints.lattice import DivisorClass, fat_point_class
from fatpoints.negcompletion import complete
from fatpoints.represent import representability, torsion
from fatpoints.witnesses import FANO, all_witnesses
from fatpoints.zariski import decompose


@contextmanager
def criterion(n, description):
    start = time.time()
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {n} [FAIL] {description} ({time.time() - start:.1f}s)",
              flush=True)
        raise
    print(f"ACCEPTANCE {n} [PASS] {description} ({time.time() - start:.1f}s)",
          flush=True)


def test_criterion_1_enumeration_counts():
    with criterion(1, "enumeration counts 11 / 29 / 146 and 69 line-only"):
        start = time.time()
        assert len(enumerate_types(6)) == 11
        assert len(enumerate_types(7)) == 29
        assert len(enumerate_types(8)) == 146
        assert len(enumerate_types(8, line_classes_only=True)) == 69
        assert time.time() - start < 60


def test_criterion_2_six_point_table():
    from fatpoints.tables import betti_rows, parse_exponents
    with criterion(2, "six-point Hilbert and Betti table reproduction"):
        start = time.time()
        for r in range(1, 7):
            for m, indices, h, f0, f1 in betti_rows(r):
                for i in indices:
                    rep = hilbert_function(builtin(r, i), (m,) * r, betti=True)
                    assert rep.values == h, (r, m, i)
                    assert rep.betti_f0 == parse_exponents(f0), (r, m, i)
                    assert rep.betti_f1 == parse_exponents(f1), (r, m, i)
        assert time.time() - start < 10


def test_criterion_3_seven_and_eight_point_tables():
    from fatpoints.tables import hilbert_rows
    with criterion(3, "seven- and eight-point Hilbert table reproduction"):
        start = time.time()
        for r in (7, 8):
            for m, indices, h in hilbert_rows(r):
                for i in indices:
                    rep = hilbert_function(builtin(r, i), (m,) * r)
                    assert rep.values == h, (r, m, i)
        assert time.time() - start < 30


def _two_line_type():
    l1 = DivisorClass(1, (1, 1, 1, 1, 1, 0, 0, 0, 0, 1))
    l2 = DivisorClass(1, (0, 0, 0, 0, 0, 1, 1, 1, 1, 1))
    return validate([l1, l2], 10, mode="conic")


def test_criterion_4_two_line_example_end_to_end():
    # The h value at t = 6 and the Betti entries in degrees 6..9 assert
    # the published figures, which are internally inconsistent with the
    # published procedure (see the decisions ledger): the degree-6 system
    # contains the explicit sextic 2*L1 + 2*L2 + p1p6 + p1p7, so h(6) is
    # 27 and not 28.  These sub-assertions fail by design.
    with criterion(4, "degree-46 two-line example end-to-end"):
        mults = (4, 2, 2, 2, 2, 3, 3, 2, 2, 3)
        t = _two_line_type()
        neg = complete(t)
        assert decompose(fat_point_class(mults, 12), neg).h0 == 47
        assert decompose(fat_point_class(mults, 13), neg).h0 == 60
        h12 = decompose(fat_point_class(mults, 12), neg).nef_part
        assert decompose(DivisorClass(h12.d + 1, h12.mults), neg).h0 == 59
        rep = hilbert_function(t, mults, betti=True)
        assert rep.degree == 46
        assert rep.values_through(15) == (1, 3, 6, 10, 15, 21, 28, 31, 35, 38,
                                          40, 42, 44, 45, 46, 46), \
            "published value 28 at t=6 is refuted by the explicit sextic; see ledger"
        assert rep.betti_f0 == {7: 5, 9: 3, 10: 1, 13: 1, 15: 1}
        assert rep.betti_f1 == {8: 5, 9: 1, 10: 1, 11: 1, 14: 1, 16: 1}


def test_criterion_5_conic_closed_forms():
    with criterion(5, "closed-form first differences for all conic cases r <= 12"):
        for r in range(2, 13):
            for case in enumerate_conic_types(r):
                t = conic_neg(case)
                for m in (1, 2):
                    closed = delta_h_closed_form(case, m)
                    assert hilbert_function(t, (m,) * r).delta == closed, (case, m)
                    if m == 2:
                        assert sum(closed) == 3 * r, case


def test_criterion_6_torsion_regression():
    # Asserts the published proof list verbatim.  The engine (and a hand
    # computation; see the decisions ledger) shows the order-2 group sits
    # at type 11, not type 13, so those two sub-assertions fail by design.
    with criterion(6, "torsion groups of the eight-point types 1..32"):
        published = {13: (2,), 16: (2,), 19: (2,), 24: (2,), 25: (2,), 29: (2,),
                     23: (2, 2), 31: (2, 2), 30: (2, 2, 2),
                     27: (3,), 28: (3,), 32: (3, 3)}
        mismatches = []
        for i in range(1, 33):
            got = torsion(builtin(8, i)).invariant_factors
            want = published.get(i, ())
            if got != want:
                mismatches.append((i, got, want))
        assert not mismatches, \
            f"published torsion list disagrees at {mismatches}; see ledger"


def test_criterion_7_characteristic_witnesses():
    with criterion(7, "Fano characteristic test and witness identification"):
        assert identify_type(PointSet(GF(2), FANO))[:2] == (7, 24)
        assert identify_type(PointSet(QQ, FANO))[:2] == (7, 23)
        stored = all_witnesses(8)
        for t in enumerate_types(8):
            index = t.table_id[1]
            verdict = representability(8, index)
            if verdict.kind == "never":
                assert index not in stored
                continue
            pts = stored[index]
            assert identify_type(pts)[:2] == (8, index)
            assert verdict.allows_characteristic(pts.field.char)


def test_criterion_8_engine_oracle_equivalence():
    with criterion(8, "engine vs brute-force oracle on random fat point schemes"):
        start = time.time()
        rng = random.Random(20240809)
        pairs = 0
        while pairs < 50:
            r = rng.choice((6, 7, 8))
            stored = all_witnesses(r)
            index = rng.choice(sorted(stored))
            pts = stored[index]
            _, _, perm = identify_type(pts)
            mults = [rng.randint(0, 3) for _ in range(r)]
            if not any(mults):
                continue
            oracle_mults = [0] * r
            for j in range(r):
                oracle_mults[perm[j]] = mults[j]
            engine = hilbert_function(builtin(r, index), mults)
            oracle = hilbert_oracle(pts, oracle_mults)
            assert engine.values == oracle.values, (r, index, mults)
            pairs += 1
        assert time.time() - start < 120


def test_criterion_9_order_independence():
    with criterion(9, "decomposition is order independent and terminates"):
        rng = random.Random(99)
        for r in range(2, 9):
            types = enumerate_types(r)
            for _ in range(200):
                t = rng.choice(types)
                neg = complete(t)
                f = DivisorClass(rng.randint(-30, 30),
                                 tuple(rng.randint(-10, 10) for _ in range(r)))
                base = decompose(f, neg)   # strict potential decrease asserted inside
                for _ in range(10):
                    order = list(range(len(neg)))
                    rng.shuffle(order)
                    res = decompose(f, neg, order=order)
                    assert (res.effective, res.nef_part, res.h0) == \
                        (base.effective, base.nef_part, base.h0)


def test_criterion_10_uniform_type_bounds():
    with criterion(10, "least separating uniform multiplicities"):
        start = time.time()
        for r, expected in ((1, 1), (2, 1), (3, 1), (4, 2), (5, 3), (6, 3)):
            assert uniform_partition(r, 10).bound == expected, r
        assert uniform_partition(7, 10).bound == 7
        assert uniform_partition(8, 16).bound >= 16
        assert time.time() - start < 300
