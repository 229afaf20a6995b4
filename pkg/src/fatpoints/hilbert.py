"""Hilbert functions, saturation degrees and graded Betti numbers of fat
point subschemes, computed from the configuration type alone.

For a scheme with multiplicities m_i on points of a given type, the
dimension of the degree-t part of the coordinate ring is
``binom(t+2, 2) - h^0(tL - sum m_i E_i)``, with h^0 evaluated through the
Zariski decomposition.  Graded Betti numbers follow from the cokernel
sizes of the multiplication maps; those are controlled by the nef part
whenever the points lie on a conic (the maps are onto) or r <= 6 (the
maps have maximal rank).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from . import zariski
from .catalog import CONIC, EIGHT_POINTS
from .configtype import ConfigurationType, enumerate_types
from .errors import BettiUnsupportedError, EmptySchemeError, RangeError
from .lattice import DivisorClass, fat_point_class, riemann_roch_value, scheme_degree
from .negcompletion import complete

_BETTI_CAVEAT = (
    "graded Betti numbers are determined by the configuration type only when "
    "the points lie on a conic or r <= 6; for 7 or 8 points off a conic the "
    "multiplication maps need not have maximal rank, so no answer is returned")


@dataclass(frozen=True)
class HilbertReport:
    mults: tuple[int, ...]
    type_ref: ConfigurationType
    values: tuple[int, ...]          # h_Z(0), ..., h_Z(tau)
    degree: int
    betti_f0: dict | None = None     # generator degrees {i: t_i}
    betti_f1: dict | None = None     # syzygy degrees {i: s_i}

    @property
    def saturation(self) -> int:
        return len(self.values) - 1

    @property
    def delta(self) -> tuple[int, ...]:
        prev = 0
        out = []
        for v in self.values:
            out.append(v - prev)
            prev = v
        return tuple(out)

    def value_at(self, t: int) -> int:
        if t < 0:
            return 0
        if t < len(self.values):
            return self.values[t]
        return self.degree

    def values_through(self, t: int) -> tuple[int, ...]:
        return tuple(self.value_at(i) for i in range(t + 1))

    def to_json(self) -> dict:
        data = {
            "mults": list(self.mults),
            "degree": self.degree,
            "saturation": self.saturation,
            "values": list(self.values),
            "delta": list(self.delta),
        }
        if self.betti_f0 is not None:
            data["betti_f0"] = {str(k): v for k, v in sorted(self.betti_f0.items())}
            data["betti_f1"] = {str(k): v for k, v in sorted(self.betti_f1.items())}
        return data


def _check_mults(t: ConfigurationType, mults):
    mults = tuple(int(m) for m in mults)
    if len(mults) != t.r:
        raise RangeError(f"expected {t.r} multiplicities, got {len(mults)}")
    if any(m < 0 for m in mults):
        raise ValueError("multiplicities must be nonnegative")
    if not any(mults):
        raise EmptySchemeError("all multiplicities are zero")
    return mults


@lru_cache(maxsize=1 << 18)
def _h0_cached(t: ConfigurationType, mults: tuple[int, ...], deg: int) -> int:
    return zariski.h0(fat_point_class(mults, deg), complete(t))


def hilbert_function(t: ConfigurationType, mults, betti: bool = False) -> HilbertReport:
    """Hilbert function values of the fat point scheme up to saturation."""
    mults = _check_mults(t, mults)
    degree = scheme_degree(mults)
    values = []
    d = 0
    while True:
        h = comb(d + 2, 2) - _h0_cached(t, mults, d)
        values.append(h)
        if h == degree:
            break
        if d > degree + 1:
            raise AssertionError("Hilbert function failed to reach the scheme degree")
        d += 1
    report = HilbertReport(mults, t, tuple(values), degree)
    if betti:
        f0, f1 = betti_numbers(t, mults, _report=report)
        report = HilbertReport(mults, t, tuple(values), degree, f0, f1)
    return report


def _on_conic(t: ConfigurationType) -> bool:
    q = DivisorClass(2, (1,) * t.r)
    return zariski.decompose(q, complete(t)).effective


def betti_numbers(t: ConfigurationType, mults, _report=None):
    """Graded Betti numbers (generator and syzygy degree counts).

    Generators: t_{i+1} = dim coker(mu_i) where mu_i multiplies degree-i
    curves through the scheme by linear forms.  Writing F(i) = H + N for
    the Zariski decomposition, dim coker(mu_i) equals
    dim coker(mu_H) + h^0(F(i+1)) - h^0(H + L); the first term vanishes on
    a conic and equals max(0, h^0(H+L) - 3 h^0(H)) for r <= 6.  Syzygies
    then come from s_i = t_i + (third difference of h_Z at i).
    """
    mults = _check_mults(t, mults)
    neg = complete(t)
    conic_regime = t.mode == CONIC or _on_conic(t)
    if t.r > 6 and not conic_regime:
        raise BettiUnsupportedError(_BETTI_CAVEAT)
    report = _report if _report is not None else hilbert_function(t, mults)
    tau = report.saturation
    h0 = lambda d: _h0_cached(t, mults, d)

    t_counts: dict[int, int] = {}
    for i in range(tau + 1):
        dec = zariski.decompose(fat_point_class(mults, i), neg)
        if not dec.effective:
            tnext = h0(i + 1)
        else:
            h = dec.nef_part
            h_plus_l = DivisorClass(h.d + 1, h.mults)
            if conic_regime:
                coker_h = 0
            else:
                coker_h = max(0, riemann_roch_value(h_plus_l) - 3 * dec.h0)
            tnext = coker_h + h0(i + 1) - riemann_roch_value(h_plus_l)
        if tnext < 0:
            raise AssertionError(f"negative generator count in degree {i + 1}")
        if tnext:
            t_counts[i + 1] = tnext

    # mu is onto at and past the saturation degree, so no generators appear
    # beyond tau + 1 and no syzygies beyond tau + 2
    s_counts: dict[int, int] = {}
    for i in range(1, tau + 3):
        d3 = (report.value_at(i) - 3 * report.value_at(i - 1)
              + 3 * report.value_at(i - 2) - report.value_at(i - 3))
        s = t_counts.get(i, 0) + d3
        if s < 0:
            raise AssertionError(f"negative syzygy count in degree {i}")
        if s:
            s_counts[i] = s
    return t_counts, s_counts


# ---------------------------------------------------------------------------
# extremal double-point Hilbert functions and uniform types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExtremalReport:
    target: tuple[int, ...]
    m: int
    matching: tuple[int, ...]               # table indices with h_Z = target
    h_max: tuple[int, ...] | None
    max_types: tuple[int, ...]
    h_min: tuple[int, ...] | None
    min_types: tuple[int, ...]
    labels: dict | None = None              # index -> description (conic mode)

    def to_json(self) -> dict:
        return {
            "target": list(self.target),
            "m": self.m,
            "matching_types": list(self.matching),
            "h_max": list(self.h_max) if self.h_max else None,
            "max_types": list(self.max_types),
            "h_min": list(self.h_min) if self.h_min else None,
            "min_types": list(self.min_types),
            "labels": self.labels,
        }


def extremal_double(h, r: int, m: int, mode: str = EIGHT_POINTS) -> ExtremalReport:
    """Among types whose simple points have Hilbert function h, compare the
    Hilbert functions at uniform multiplicity m pointwise.

    A pointwise maximum or minimum is reported only when some matching
    type attains it; the extremes may fail to be attained, in which case
    the corresponding slot is None.  In conic mode (any r) the candidates
    are the points-on-a-conic types, numbered in enumeration order and
    described in ``labels``.
    """
    if m < 1:
        raise RangeError("multiplicity must be at least 1")
    h = tuple(h)
    if mode == CONIC:
        from .conic import conic_neg, enumerate_conic_types
        candidates = [(i, conic_neg(c), c.describe())
                      for i, c in enumerate(enumerate_conic_types(r), start=1)]
    else:
        candidates = [(t.table_id[1], t, None) for t in enumerate_types(r)]
    matching = []
    reports = {}
    labels = {} if mode == CONIC else None
    for idx, t, label in candidates:
        rep1 = hilbert_function(t, (1,) * r)
        if rep1.values == h:
            matching.append(idx)
            reports[idx] = hilbert_function(t, (m,) * r)
            if labels is not None:
                labels[idx] = label
    if not matching:
        return ExtremalReport(h, m, (), None, (), None, (), labels)
    span = max(rep.saturation for rep in reports.values())
    degree = next(iter(reports.values())).degree
    seqs = {i: rep.values_through(span) for i, rep in reports.items()}
    hi = tuple(max(s[t] for s in seqs.values()) for t in range(span + 1))
    lo = tuple(min(s[t] for s in seqs.values()) for t in range(span + 1))
    max_types = tuple(i for i in matching if seqs[i] == hi)
    min_types = tuple(i for i in matching if seqs[i] == lo)

    def trim(seq):   # report each extremal sequence up to its own saturation
        cut = seq.index(degree)
        return seq[:cut + 1]

    return ExtremalReport(
        h, m, tuple(matching),
        trim(hi) if max_types else None, max_types,
        trim(lo) if min_types else None, min_types, labels)


@dataclass(frozen=True)
class UniformReport:
    r: int
    max_mult: int
    groups: tuple[tuple[int, ...], ...]      # partition of table indices
    separations: dict                        # (i, j) -> least separating m
    bound: int                               # max over separated pairs

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "max_mult": self.max_mult,
            "groups": [list(g) for g in self.groups],
            "separating_bound": self.bound,
            "separations": {f"{i},{j}": m for (i, j), m in sorted(self.separations.items())},
        }


def worker_count() -> int:
    """Worker cap from FATPOINT_THREADS (default 1, i.e. sequential)."""
    import os
    try:
        n = int(os.environ.get("FATPOINT_THREADS", "1"))
    except ValueError:
        return 1
    return max(1, min(n, os.cpu_count() or 1))


def uniform_partition(r: int, max_mult: int) -> UniformReport:
    """Group the types of r points by the Hilbert functions of all uniform
    multiplicities up to max_mult, recording when each pair separates.

    With FATPOINT_THREADS > 1 the per-type computations run on a thread
    pool; the refinement itself is a deterministic merge over the results.
    """
    if max_mult < 1:
        raise RangeError("multiplicity bound must be at least 1")
    types = enumerate_types(r)
    indices = [t.table_id[1] for t in types]
    by_index = {t.table_id[1]: t for t in types}
    workers = worker_count()
    if workers > 1:
        from concurrent.futures import ThreadPoolExecutor
        jobs = [(t, (m,) * r) for t in types for m in range(1, max_mult + 1)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(lambda job: hilbert_function(*job), jobs))
    blocks = [list(indices)]
    separations: dict[tuple[int, int], int] = {}
    for m in range(1, max_mult + 1):
        refined = []
        for block in blocks:
            sub: dict[tuple, list[int]] = {}
            for i in block:
                key = hilbert_function(by_index[i], (m,) * r).values
                sub.setdefault(key, []).append(i)
            parts = [sorted(v) for v in sub.values()]
            for a in range(len(parts)):
                for b in range(a + 1, len(parts)):
                    for i in parts[a]:
                        for j in parts[b]:
                            separations[(min(i, j), max(i, j))] = m
            refined.extend(parts)
        blocks = refined
    blocks.sort()
    # at least multiplicity 1 is always required to read off anything
    bound = max(separations.values(), default=1)
    return UniformReport(r, max_mult, tuple(tuple(b) for b in blocks),
                         separations, bound)
