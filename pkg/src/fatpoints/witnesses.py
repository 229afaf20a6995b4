"""Certified coordinate witnesses for the representable types.

Every representable type of 6, 7 or 8 points gets an explicit point set
over a small exact field, checked by running the type detector on it.
Witnesses are found by randomized incremental search: each point is drawn
from the intersection of the curves its type forces through already
placed points, and candidates that create an incidence the type forbids
are rejected.  Types containing the singular-cubic class are built on an
explicit singular cubic instead (the double point goes to the singular
point, the rest to smooth curve points), where lines and conics through
curve points become one-equation conditions on the parameters: three
points of the nodal cubic (t : t^2 : 1 + t^3) are collinear iff the
product of their parameters is -1, six lie on a conic iff it is +1, and
on the cuspidal cubic (t : 1 : t^3) the same holds with sums and 0.

The bundled data file is regenerated with
``python3 -m fatpoints.witnesses --seed 20240809``.
"""

from __future__ import annotations

import argparse
import json
import random
from functools import lru_cache
from importlib import resources
from itertools import combinations

from . import represent
from .configtype import ConfigurationType, enumerate_types
from .errors import ConsistencyError, GeometryError
from .fields import GF, QQ
from .geometry import PointSet, identify_type, linear_system_dim

FANO = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1))

_ODD_FIELDS = (11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53)


def fano_points(field) -> PointSet:
    return PointSet(field, FANO)


# ---------------------------------------------------------------------------
# incremental plane search
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _plane_points(field):
    pts = [(field.one, a, b) for a in field.elements() for b in field.elements()]
    pts += [(field.zero, field.one, c) for c in field.elements()]
    pts.append((field.zero, field.zero, field.one))
    return tuple(pts)


def _det3(field, p, q, s):
    f = field
    det = f.sub(f.mul(p[0], f.sub(f.mul(q[1], s[2]), f.mul(q[2], s[1]))),
                f.mul(p[1], f.sub(f.mul(q[0], s[2]), f.mul(q[2], s[0]))))
    return f.add(det, f.mul(p[2], f.sub(f.mul(q[0], s[1]), f.mul(q[1], s[0]))))


def _on_line(field, p, q, candidate):
    return _det3(field, p, q, candidate) == field.zero


def _on_conic_through(field, five, candidate):
    pts = PointSet(field, list(five) + [candidate])
    return linear_system_dim(pts, [1] * 6, 2) >= 1


def _classes_as_letter_sets(t: ConfigurationType):
    lines, conics, cubic_double = [], [], None
    for c in t.sorted_classes:
        support = frozenset(i for i, m in enumerate(c.mults) if m)
        if c.d == 1:
            lines.append(support)
        elif c.d == 2:
            conics.append(support)
        else:
            cubic_double = next(i for i, m in enumerate(c.mults) if m == 2)
    return lines, conics, cubic_double


def _search_plane(t: ConfigurationType, field, rng, budget=40000):
    """Place the points one at a time in the projective plane."""
    r = t.r
    lines, conics, _ = _classes_as_letter_sets(t)
    universe = _plane_points(field)
    placed: list = []
    nodes = 0

    def allowed(candidate, i):
        for p in placed:
            if p == candidate:
                return False
        # forced incidences
        for line in lines:
            if i in line:
                prev = [j for j in range(i) if j in line]
                if len(prev) >= 2 and not _on_line(field, placed[prev[0]], placed[prev[1]], candidate):
                    return False
        # forbidden collinearities
        for x, y in combinations(range(i), 2):
            if _on_line(field, placed[x], placed[y], candidate):
                if not any({x, y, i} <= line for line in lines):
                    return False
        # conic constraints, forced and forbidden
        for five in combinations(range(i), 5):
            sfive = set(five)
            if any(len(line & sfive) >= 3 for line in lines):
                continue
            on = _on_conic_through(field, [placed[j] for j in five], candidate)
            required = any(sfive | {i} <= conic for conic in conics)
            if required and not on:
                return False
            if on and not any(sfive | {i} <= conic for conic in conics):
                return False
        return True

    def place(i):
        nonlocal nodes
        if i == r:
            return True
        req = [line for line in lines if i in line
               and len([j for j in range(i) if j in line]) >= 2]
        if req:
            prev = [j for j in range(i) if j in req[0]]
            cands = [p for p in universe
                     if _on_line(field, placed[prev[0]], placed[prev[1]], p)]
        else:
            cands = list(universe)
        rng.shuffle(cands)
        for p in cands:
            nodes += 1
            if nodes > budget:
                return False
            if allowed(p, i):
                placed.append(p)
                if place(i + 1):
                    return True
                placed.pop()
        return False

    if place(0):
        return PointSet(field, placed)
    return None


# ---------------------------------------------------------------------------
# placement on a singular cubic
# ---------------------------------------------------------------------------

def _search_on_cubic(t: ConfigurationType, field, rng, budget=40000):
    """Witness for a type containing the singular-cubic class.

    Uses the nodal cubic xyz = x^3 + y^3 (group: units, line condition
    product = -1) in odd characteristic and the cuspidal cubic
    y^2 z = x^3 (group: field, line condition sum = 0) in characteristic
    2.  The double point of the cubic class goes to the singular point.
    """
    r = t.r
    lines, conics, double_idx = _classes_as_letter_sets(t)
    additive = field.char == 2
    if additive:
        node = (field.zero, field.zero, field.one)

        def curve_point(v):
            return (v, field.one, field.pow(v, 3))

        def combine(values):        # group op over a set of parameters
            acc = field.zero
            for v in values:
                acc = field.add(acc, v)
            return acc

        line_target = field.zero
        conic_target = field.zero
        domain = list(field.elements())

        def solve(target, others):  # v with combine(others + [v]) == target
            return field.sub(target, combine(others))
    else:
        node = (field.zero, field.zero, field.one)

        def curve_point(v):
            return (v, field.mul(v, v), field.add(field.one, field.pow(v, 3)))

        def combine(values):
            acc = field.one
            for v in values:
                acc = field.mul(acc, v)
            return acc

        line_target = field.neg(field.one)
        conic_target = field.one
        domain = [v for v in field.elements() if v != field.zero]

        def solve(target, others):
            return field.mul(target, field.inv(combine(others)))

    values: dict[int, object] = {}
    order = [i for i in range(r) if i != double_idx]

    def forced_value(i):
        forced = []
        for line in lines:
            if i in line:
                others = [j for j in line if j != i]
                if all(j in values for j in others):
                    forced.append(solve(line_target, [values[j] for j in others]))
        for conic in conics:
            if i in conic:
                others = [j for j in conic if j != i]
                if all(j in values for j in others):
                    forced.append(solve(conic_target, [values[j] for j in others]))
        if not forced:
            return None, True
        return forced[0], all(f == forced[0] for f in forced)

    def allowed(i, v):
        if v in values.values():
            return False
        values[i] = v
        try:
            # no unplanned collinear triple or co-conic six among curve points
            for pair in combinations([j for j in values if j != i], 2):
                triple = set(pair) | {i}
                if combine([values[j] for j in triple]) == line_target:
                    if not any(triple <= line for line in lines):
                        return False
            for five in combinations([j for j in values if j != i], 5):
                six = set(five) | {i}
                if any(len(line & six) >= 3 for line in lines):
                    continue
                if combine([values[j] for j in six]) == conic_target:
                    if not any(six <= conic for conic in conics):
                        return False
            return True
        finally:
            del values[i]

    nodes = 0

    def place(pos):
        nonlocal nodes
        if pos == len(order):
            return True
        i = order[pos]
        forced, consistent = forced_value(i)
        if not consistent:
            return False
        cands = [forced] if forced is not None else rng.sample(domain, len(domain))
        for v in cands:
            nodes += 1
            if nodes > budget:
                return False
            if allowed(i, v):
                values[i] = v
                if place(pos + 1):
                    return True
                del values[i]
        return False

    if not place(0):
        return None
    pts = [node if i == double_idx else curve_point(values[i]) for i in range(r)]
    try:
        return PointSet(field, pts)
    except GeometryError:
        return None


# ---------------------------------------------------------------------------
# generation and access
# ---------------------------------------------------------------------------

def _candidate_fields(verdict):
    if verdict.kind == represent.NEVER:
        return ()
    if verdict.kind == represent.ONLY_CHAR:  # always characteristic 2 here
        return (GF(2), GF(2, 2), GF(2, 3), GF(2, 4))
    return tuple(GF(p) for p in _ODD_FIELDS)


def find_witness(t: ConfigurationType, rng, budget=40000):
    """Search for a certified witness of one type; None if non-representable."""
    r, index = t.table_id
    verdict = represent.representability(r, index)
    if verdict.kind == represent.NEVER:
        return None
    if (r, index) in ((7, 23), (7, 24)):
        return fano_points(QQ if index == 23 else GF(2))
    _, _, double_idx = _classes_as_letter_sets(t)
    for field in _candidate_fields(verdict):
        if double_idx is not None:
            if field.char == 2 and field.order < 8:
                continue  # the cuspidal additive search needs room
            pts = _search_on_cubic(t, field, rng, budget)
        else:
            pts = _search_plane(t, field, rng, budget)
        if pts is None:
            continue
        try:
            rr, idx, _ = identify_type(pts)
        except ConsistencyError:
            continue
        if (rr, idx) == (r, index) and verdict.allows_characteristic(field.char):
            return pts
    return None


def generate(r_values=(6, 7, 8), seed=20240809):
    """Regenerate the witness table; returns {r: {index: PointSet}}.

    Hard types get retried with growing budgets and fresh randomness.
    """
    out = {}
    for r in r_values:
        per = {}
        for t in enumerate_types(r):
            index = t.table_id[1]
            verdict = represent.representability(r, index)
            pts = None
            for attempt, budget in enumerate((40000, 250000, 250000, 1000000)):
                rng = random.Random((seed + r, index, attempt).__hash__())
                pts = find_witness(t, rng, budget=budget)
                if pts is not None or verdict.kind == represent.NEVER:
                    break
            if pts is None and verdict.kind != represent.NEVER:
                raise ConsistencyError(f"no witness found for representable type ({r}, {index})")
            if pts is not None:
                per[index] = pts
        out[r] = per
    return out


def _data_path():
    return resources.files("fatpoints").joinpath("data/witnesses.json")


@lru_cache(maxsize=1)
def _load():
    raw = json.loads(_data_path().read_text())
    table = {}
    for r_str, per in raw.items():
        table[int(r_str)] = {int(idx): PointSet.from_json(entry)
                             for idx, entry in per.items()}
    return table


def witness(r: int, index: int) -> PointSet | None:
    """The stored witness point set, or None for non-representable types."""
    return _load().get(r, {}).get(index)


def all_witnesses(r: int) -> dict[int, PointSet]:
    return dict(_load().get(r, {}))


def main(argv=None):
    parser = argparse.ArgumentParser(description="regenerate the witness data file")
    parser.add_argument("--seed", type=int, default=20240809)
    parser.add_argument("--out", default=None)
    args = parser.parse_args(argv)
    table = generate(seed=args.seed)
    data = {str(r): {str(i): pts.to_json() for i, pts in per.items()}
            for r, per in table.items()}
    path = args.out or str(_data_path())
    with open(path, "w") as fh:
        json.dump(data, fh, indent=1, sort_keys=True)
        fh.write("\n")
    total = sum(len(per) for per in table.values())
    print(f"wrote {total} witnesses to {path}")


if __name__ == "__main__":
    main()
