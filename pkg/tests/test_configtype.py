import random

import pytest

from fatpoints.configtype import (builtin, canonical_form, enumerate_types,
                                  parse_notation, validate)
from fatpoints.errors import (InvalidTypeError, NotationError, RangeError,
                              TableLookupError)
from fatpoints.lattice import DivisorClass, line_through


def test_validate_rejects_incompatible_pair():
    a = line_through(8, [1, 2, 3])
    b = line_through(8, [1, 2, 4])
    with pytest.raises(InvalidTypeError) as err:
        validate([a, b], 8)
    assert "incompatible" in str(err.value)


def test_validate_accepts_disjoint_lines():
    t = validate([line_through(8, [1, 2, 3]), line_through(8, [4, 5, 6])], 8)
    assert len(t.neg_classes) == 2


def test_validate_rejects_square_minus_one_member():
    with pytest.raises(InvalidTypeError):
        validate([line_through(8, [1, 2])], 8)


def test_validate_rejects_non_candidate():
    with pytest.raises(InvalidTypeError):
        validate([DivisorClass(5, (2,) * 8)], 8)


def test_four_line_matroid_accepted():
    rows = [[1, 2, 3], [1, 4, 5], [2, 4, 6], [3, 5, 7]]
    t = validate([line_through(8, row) for row in rows], 8)
    assert len(t.neg_classes) == 4


def test_canonical_relabelling_equality():
    t1 = validate([line_through(8, [1, 2, 3])], 8)
    t2 = validate([line_through(8, [6, 7, 8])], 8)
    assert t1.canonical_key == t2.canonical_key
    empty = validate([], 8)
    q = validate([DivisorClass(2, (1,) * 8)], 8)
    assert empty.canonical_key != q.canonical_key


def test_extension_example_conics_are_equivalent():
    # two conic extensions of the four-line matroid differ by a relabelling
    lines = [line_through(8, [1, 2, 3]), line_through(8, [1, 4, 5]),
             line_through(8, [2, 4, 6]), line_through(8, [3, 5, 7])]
    q1 = DivisorClass(2, (1, 0, 1, 1, 0, 1, 1, 1))
    q2 = DivisorClass(2, (1, 1, 0, 0, 1, 1, 1, 1))
    t1 = validate(lines + [q1], 8)
    t2 = validate(lines + [q2], 8)
    assert t1.canonical_key == t2.canonical_key
    assert t1.canonical_key == builtin(8, 77).canonical_key
    both = validate(lines + [q1, q2], 8)
    assert both.canonical_key == builtin(8, 89).canonical_key
    cubic = DivisorClass(3, (1, 1, 1, 1, 1, 1, 1, 2))
    assert q1.dot(cubic) < 0  # the conic and the cubic cannot coexist
    with_cubic = validate(lines + [cubic], 8)
    assert with_cubic.canonical_key == builtin(8, 40).canonical_key
    assert validate(lines, 8).canonical_key == builtin(8, 10).canonical_key


def test_random_relabelling_preserves_key():
    rng = random.Random(3)
    for r in (6, 7, 8):
        for t in rng.sample(enumerate_types(r), 5):
            perm = list(range(r))
            rng.shuffle(perm)
            assert t.relabel(perm).canonical_key == t.canonical_key


def test_enumeration_counts():
    assert [len(enumerate_types(r)) for r in range(1, 9)] == [1, 1, 2, 3, 5, 11, 29, 146]
    assert len(enumerate_types(8, line_classes_only=True)) == 69


def test_enumeration_keys_are_distinct():
    for r in (6, 7, 8):
        keys = {t.canonical_key for t in enumerate_types(r)}
        assert len(keys) == len(enumerate_types(r))


def test_every_type_embeds_into_next_r():
    for r in range(1, 8):
        bigger = {t.canonical_key for t in enumerate_types(r + 1)}
        for t in enumerate_types(r):
            extended = validate([DivisorClass(c.d, c.mults + (0,))
                                 for c in t.neg_classes], r + 1)
            assert extended.canonical_key in bigger


def test_seven_point_24_is_eight_point_30():
    t24 = builtin(7, 24)
    extended = validate([DivisorClass(c.d, c.mults + (0,)) for c in t24.neg_classes], 8)
    # swap the labels of the 4th and 7th points, then the keys agree
    perm = [0, 1, 2, 6, 4, 5, 3, 7]
    assert extended.relabel(perm).canonical_key == builtin(8, 30).canonical_key
    assert extended.canonical_key == builtin(8, 30).canonical_key


def test_builtin_rows():
    assert builtin(7, 25).sorted_classes == (DivisorClass(2, (1,) * 7),)
    t610 = builtin(6, 10)
    assert t610.neg_classes == frozenset(
        line_through(6, s) for s in ([1, 2, 3], [1, 4, 5], [2, 4, 6], [3, 5, 6]))
    t833 = builtin(8, 33)
    assert t833.sorted_classes == (DivisorClass(3, (1, 1, 1, 1, 1, 1, 1, 2)),)
    with pytest.raises(TableLookupError):
        builtin(7, 30)
    with pytest.raises(RangeError):
        enumerate_types(9)


def test_parse_notation():
    t = parse_notation("1: abc, ade", 6)
    assert t.neg_classes == frozenset([line_through(6, [1, 2, 3]),
                                       line_through(6, [1, 4, 5])])
    assert parse_notation("2: abcdef", 6).sorted_classes == (DivisorClass(2, (1,) * 6),)
    t = parse_notation("3: abcdefgh", 8)
    assert t.sorted_classes == (DivisorClass(3, (1, 1, 1, 1, 1, 1, 1, 2)),)
    # both separators appear in the tables
    assert (parse_notation("1: abg; 2: abcdef", 7).canonical_key
            == parse_notation("1: abg, 2: abcdef", 7).canonical_key)
    with pytest.raises(NotationError):
        parse_notation("1: abq", 6)
    with pytest.raises(NotationError):
        parse_notation("1: abch", 6)   # h out of range for r = 6
    with pytest.raises(NotationError):
        parse_notation("abc", 6)       # no degree marker


def test_format_round_trip():
    for r in (6, 7, 8):
        for t in enumerate_types(r):
            assert parse_notation(t.notation, r).neg_classes == t.neg_classes


def test_canonical_form_is_bytes():
    assert isinstance(canonical_form(builtin(6, 10)), bytes)
