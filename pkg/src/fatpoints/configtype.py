"""Formal configuration types: pairwise nonnegative sets of negative classes.

A formal configuration type for r points is a set of candidate classes of
self-intersection <= -2 in which any two distinct members meet
nonnegatively.  Two types are equivalent when a permutation of the points
carries one onto the other; equivalence is decided through a canonical
form computed by branch-and-bound over the r! relabellings.
"""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import combinations

from . import catalog
from .catalog import CONIC, EIGHT_POINTS
from .errors import (ConsistencyError, DimensionError, InvalidTypeError,
                     NotationError, RangeError)
from .lattice import DivisorClass

_LETTERS = "abcdefgh"


class ConfigurationType:
    """A validated formal configuration type (labelled representative)."""

    __slots__ = ("r", "mode", "neg_classes", "table_id", "_canon")

    def __init__(self, r, mode, neg_classes, table_id=None):
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "mode", mode)
        object.__setattr__(self, "neg_classes", frozenset(neg_classes))
        object.__setattr__(self, "table_id", table_id)
        object.__setattr__(self, "_canon", None)

    def __setattr__(self, name, value):
        raise AttributeError("ConfigurationType is immutable")

    @property
    def sorted_classes(self) -> tuple[DivisorClass, ...]:
        return tuple(sorted(self.neg_classes, key=lambda c: c.vec))

    def _canonical(self):
        if self._canon is None:
            vecs = [(c.d, c.mults) for c in self.neg_classes]
            object.__setattr__(self, "_canon", canonical_labelling(vecs, self.r))
        return self._canon

    @property
    def canonical_key(self) -> bytes:
        key, _ = self._canonical()
        return encode_key(key)

    @property
    def canonical_perm(self) -> tuple[int, ...]:
        """perm[j] = original 0-based point index placed at new position j."""
        return self._canonical()[1]

    @property
    def notation(self) -> str:
        return format_notation(self.sorted_classes, self.r)

    def relabel(self, perm) -> "ConfigurationType":
        """Apply a point permutation; perm[j] = old index at new position j."""
        classes = [DivisorClass(c.d, tuple(c.mults[perm[j]] for j in range(self.r)))
                   for c in self.neg_classes]
        return ConfigurationType(self.r, self.mode, classes)

    def __eq__(self, other):
        return (isinstance(other, ConfigurationType)
                and self.r == other.r and self.mode == other.mode
                and self.neg_classes == other.neg_classes)

    def __hash__(self):
        return hash((self.r, self.mode, self.neg_classes))

    def __repr__(self):
        tid = f", table_id={self.table_id}" if self.table_id else ""
        return f"ConfigurationType(r={self.r}, {self.notation!r}{tid})"

    def to_json(self) -> dict:
        data = {
            "r": self.r,
            "mode": self.mode,
            "classes": [c.to_json() for c in self.sorted_classes],
            "canonical_key": self.canonical_key.hex(),
        }
        if self.r <= 8:
            data["notation"] = self.notation
        if self.table_id is not None:
            data["index"] = self.table_id[1]
        return data


def validate(classes, r: int, mode: str = EIGHT_POINTS) -> ConfigurationType:
    """Check the configuration-type axioms and build the type.

    Every member must be a catalogued candidate of self-intersection at
    most -2, and distinct members must meet nonnegatively.
    """
    if mode == EIGHT_POINTS and not 1 <= r <= 8:
        raise RangeError(f"eight-point mode supports 1 <= r <= 8, got r={r}")
    if mode == CONIC and r < 2:
        raise RangeError(f"conic mode supports r >= 2, got r={r}")
    classes = frozenset(classes)
    for c in classes:
        if c.r != r:
            raise DimensionError(f"class {c!r} does not live on a blow-up at {r} points")
        if not _member_allowed(c, r, mode):
            raise InvalidTypeError(f"class {c!r} is not in the candidate catalog for r={r}")
        if c.self_intersection() > -2:
            raise InvalidTypeError(
                f"class {c!r} has self-intersection {c.self_intersection()}; "
                "type members must have self-intersection <= -2")
    ordered = sorted(classes, key=lambda c: c.vec)
    for a, b in combinations(ordered, 2):
        if a.dot(b) < 0:
            raise InvalidTypeError(
                f"incompatible classes {a!r} and {b!r}: pairing {a.dot(b)} < 0")
    return ConfigurationType(r, mode, classes)


def _member_allowed(c: DivisorClass, r: int, mode: str) -> bool:
    if mode == CONIC:
        return catalog.is_candidate(c, r, mode)
    if r == 1:
        return False  # no square <= -2 candidates exist on one blow-up
    return catalog.is_candidate(c, r, mode)


# ---------------------------------------------------------------------------
# canonical form
# ---------------------------------------------------------------------------

def canonical_labelling(vecs, r: int):
    """Minimise the relabelled class matrix over all point permutations.

    ``vecs`` is an iterable of ``(d, mults)`` pairs.  The result is
    ``(key, perm)`` where ``key`` is the sorted tuple of relabelled class
    vectors and ``perm[j]`` is the original column placed at position j.
    Keys are minimal for the order that compares the sorted column-prefix
    lists depth by depth, so equal keys mean equivalent class sets.

    The search prunes branches whose sorted prefixes already exceed the
    incumbent and skips interchangeable (identical) columns, which keeps
    the worst case (highly symmetric sets) to a few thousand nodes.
    """
    rows = sorted(vecs)
    n = len(rows)
    if n == 0:
        return ((), tuple(range(r)))
    ds = [v[0] for v in rows]
    ms = [v[1] for v in rows]
    colsig = [tuple(m[c] for m in ms) for c in range(r)]

    best_hist: list | None = None
    best_perm: tuple | None = None

    def search(order, cur):
        nonlocal best_hist, best_perm
        k = len(order)
        prefixes = tuple(sorted(cur))
        if best_hist is not None:
            b = best_hist[k]
            if prefixes > b:
                return
            if prefixes < b:
                # everything below beats the incumbent; rebuild it from here
                best_hist = None
        if k == r:
            if best_hist is None:
                final = prefixes
                best_hist = [tuple(row[:j + 1] for row in final) for j in range(r + 1)]
                best_perm = tuple(order)
            return
        used = set(order)
        seen = set()
        children = []
        for c in range(r):
            if c in used or colsig[c] in seen:
                continue
            seen.add(colsig[c])
            child = [cur[i] + (ms[i][c],) for i in range(n)]
            children.append((sorted(child), c, child))
        children.sort(key=lambda t: t[0])
        for _, c, child in children:
            search(order + [c], child)

    search([], [(d,) for d in ds])
    return (best_hist[r], best_perm)


def encode_key(key) -> bytes:
    """Deterministic byte encoding of a canonical key."""
    return repr(key).encode("ascii")


# ---------------------------------------------------------------------------
# notation
# ---------------------------------------------------------------------------

_ITEM_RE = re.compile(r"^(?:(\d+)\s*:\s*)?([a-h]+)$")


def parse_notation(text: str, r: int) -> ConfigurationType:
    """Parse table notation like ``"1: abc, ade; 2: abcdef"``.

    Degree-1 and degree-2 groups list the points on a line or conic; a
    degree-3 group lists the points on a singular cubic whose double point
    is the last letter.  Group separators may be ``;`` or ``,``.
    """
    if not 1 <= r <= 8:
        raise RangeError("notation supports at most 8 points")
    text = text.strip()
    classes = []
    if text in ("", "empty"):
        return validate([], r)
    degree = None
    for raw in re.split(r"[;,]", text):
        item = raw.strip()
        if not item:
            continue
        m = _ITEM_RE.match(item)
        if m is None:
            raise NotationError(f"cannot parse notation item {item!r}")
        if m.group(1) is not None:
            degree = int(m.group(1))
        if degree is None:
            raise NotationError(f"item {item!r} appears before any degree marker")
        word = m.group(2)
        if len(set(word)) != len(word):
            raise NotationError(f"repeated letter in {item!r}")
        idx = [_LETTERS.index(ch) for ch in word]
        if max(idx) >= r:
            raise NotationError(f"letter {_LETTERS[max(idx)]!r} out of range for r={r}")
        mults = [0] * r
        for i in idx:
            mults[i] = 1
        if degree == 3:
            mults[idx[-1]] = 2
        elif degree not in (1, 2):
            raise NotationError(f"unsupported degree {degree} in notation")
        classes.append(DivisorClass(degree, tuple(mults)))
    return validate(classes, r)


def format_notation(classes, r: int) -> str:
    """Inverse of parse_notation for class sets with entries in {0,1,2}."""
    if r > 8:
        raise NotationError("letter notation supports at most 8 points")
    groups: dict[int, list[str]] = {}
    for c in sorted(classes, key=lambda c: c.vec):
        if c.d not in (1, 2, 3) or not set(c.mults) <= {0, 1, 2}:
            raise NotationError(f"class {c!r} has no letter notation")
        simple = [_LETTERS[i] for i, m in enumerate(c.mults) if m == 1]
        double = [_LETTERS[i] for i, m in enumerate(c.mults) if m == 2]
        if c.d == 3:
            if len(double) != 1:
                raise NotationError(f"cubic class {c!r} needs exactly one double point")
            word = "".join(simple) + double[0]
        else:
            if double:
                raise NotationError(f"class {c!r} has no letter notation")
            word = "".join(simple)
        groups.setdefault(c.d, []).append(word)
    if not groups:
        return "empty"
    parts = []
    for d in sorted(groups):
        parts.append(f"{d}: " + ", ".join(sorted(groups[d], key=lambda w: (len(w), w))))
    return "; ".join(parts)


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def _extend_and_dedupe(cand_vecs, r):
    """All pairwise-nonnegative subsets of the candidates, up to equivalence.

    Grows sets one class at a time from canonical representatives, which
    visits every equivalence class because removing any element of a type
    leaves a type.  Returns a dict canonical-key -> representative tuple
    of candidate indices.
    """
    ncand = len(cand_vecs)
    dots = [[cand_vecs[i][0] * cand_vecs[j][0]
             - sum(a * b for a, b in zip(cand_vecs[i][1], cand_vecs[j][1]))
             for j in range(ncand)] for i in range(ncand)]
    empty_key = canonical_labelling([], r)[0]
    found: dict[tuple, tuple[int, ...]] = {empty_key: ()}
    frontier = [()]
    while frontier:
        fresh: dict[tuple, tuple[int, ...]] = {}
        seen_sets = set()
        for base in frontier:
            for c in range(ncand):
                if c in base or not all(dots[c][t] >= 0 for t in base):
                    continue
                candidate_set = tuple(sorted(base + (c,)))
                if candidate_set in seen_sets:
                    continue
                seen_sets.add(candidate_set)
                key = canonical_labelling([cand_vecs[i] for i in candidate_set], r)[0]
                if key not in found and key not in fresh:
                    fresh[key] = candidate_set
        found.update(fresh)
        frontier = list(fresh.values())
    return found


@lru_cache(maxsize=None)
def enumerate_types(r: int, line_classes_only: bool = False):
    """All formal configuration types for r points, up to equivalence.

    The list is ordered to match the built-in tables (see tables module);
    a mismatch between the enumeration and the tables raises, since either
    would indicate a transcription or enumeration bug.  With
    ``line_classes_only`` the candidates are restricted to degree-1
    classes, which recovers the simple rank <= 3 matroids.
    """
    if not 1 <= r <= 8:
        raise RangeError(f"enumeration supports 1 <= r <= 8, got r={r}")
    if r == 1:
        cands = []
    else:
        cands = list(catalog.negative_candidates(r).square_at_most(-2))
        if line_classes_only:
            cands = [c for c in cands if c.d == 1]
    cand_vecs = [(c.d, c.mults) for c in cands]
    found = _extend_and_dedupe(cand_vecs, r)

    def build(indices):
        return validate([cands[i] for i in indices], r)

    if line_classes_only:
        reps = sorted(found.items(), key=lambda kv: (len(kv[1]), kv[0]))
        return tuple(build(idx) for _, idx in reps)

    from .tables import type_notations  # deferred; tables imports this module
    notations = type_notations(r)
    by_key: dict[bytes, ConfigurationType] = {}
    for index, text in notations:
        t = parse_notation(text, r)
        t = ConfigurationType(r, t.mode, t.neg_classes, table_id=(r, index))
        if t.canonical_key in by_key:
            raise ConsistencyError(f"table rows {by_key[t.canonical_key].table_id} and "
                                   f"{(r, index)} are equivalent")
        by_key[t.canonical_key] = t
    enum_keys = {encode_key(k) for k in found}
    table_keys = set(by_key)
    if enum_keys != table_keys:
        missing = [by_key[k].table_id for k in table_keys - enum_keys]
        extra = [format_notation([cands[i] for i in found[k]], r)
                 for k in found if encode_key(k) in enum_keys - table_keys]
        raise ConsistencyError(
            f"enumeration for r={r} does not match the built-in table: "
            f"table rows missing from enumeration: {missing}; "
            f"enumerated types missing from table: {extra}")
    return tuple(t for _, t in sorted(by_key.items(), key=lambda kv: kv[1].table_id))


def builtin(r: int, index: int) -> ConfigurationType:
    """The stored table row (r, index)."""
    types = enumerate_types(r)
    if not 1 <= index <= len(types):
        from .errors import TableLookupError
        raise TableLookupError(f"no type with index {index} for r={r} "
                               f"(valid range 1..{len(types)})")
    return types[index - 1]


@lru_cache(maxsize=None)
def _key_lookup(r: int) -> dict[bytes, ConfigurationType]:
    return {t.canonical_key: t for t in enumerate_types(r)}


def lookup_by_key(key: bytes, r: int) -> ConfigurationType | None:
    return _key_lookup(r).get(key)


def canonical_form(t: ConfigurationType) -> bytes:
    return t.canonical_key
