"""Effectivity and Zariski decomposition by greedy reduction.

Given a class F and the set of prime negative classes, repeatedly
subtract any negative class meeting the running class negatively.  The
pairing with the ample reference class drops by at least one each step,
so the loop ends either with a nef class (then F = H + N is the Zariski
decomposition and h^0 is the Riemann-Roch value of H) or with a class
that already pairs nonpositively with the ample class and therefore
cannot be effective.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyError, DimensionError
from .lattice import DivisorClass, riemann_roch_value
from .negcompletion import NegSet

# Entry bound keeping every intermediate pairing far inside int64.
_ENTRY_BOUND = 1 << 40


@dataclass(frozen=True)
class ZariskiResult:
    input: DivisorClass
    effective: bool
    nef_part: DivisorClass | None
    fixed_part: tuple[tuple[DivisorClass, int], ...]
    h0: int

    def fixed_part_class(self) -> DivisorClass:
        total = DivisorClass(0, (0,) * self.input.r)
        for c, k in self.fixed_part:
            total = total + k * c
        return total

    def to_json(self) -> dict:
        return {
            "input": self.input.to_json(),
            "effective": self.effective,
            "h0": self.h0,
            "nef_part": self.nef_part.to_json() if self.nef_part else None,
            "fixed_part": [[c.to_json(), k] for c, k in self.fixed_part],
        }


def small_r_result(f: DivisorClass) -> ZariskiResult:
    """Ad hoc rules for blow-ups at 0 or 1 points.

    For r = 0, tL is effective iff t >= 0.  For r = 1, tL - mE is
    effective iff t >= 0 and t >= m, and nef iff t >= m and m >= 0.
    """
    if f.r > 1:
        raise DimensionError("small_r_result applies only for r <= 1")
    t = f.d
    if f.r == 0:
        if t < 0:
            return ZariskiResult(f, False, None, (), 0)
        return ZariskiResult(f, True, f, (), riemann_roch_value(f))
    m = f.mults[0]
    if t < 0 or t < m:
        return ZariskiResult(f, False, None, (), 0)
    if m >= 0:
        return ZariskiResult(f, True, f, (), riemann_roch_value(f))
    e1 = DivisorClass(0, (-1,))
    h = DivisorClass(t, (0,))
    return ZariskiResult(f, True, h, ((e1, -m),), riemann_roch_value(h))


def decompose(f: DivisorClass, neg: NegSet, order=None) -> ZariskiResult:
    """Run the reduction loop; ``order`` permutes the scan order of the
    negative classes (the outcome must not depend on it)."""
    if f.r <= 1:
        return small_r_result(f)
    if f.r != neg.r:
        raise DimensionError(f"class r={f.r} vs negative set r={neg.r}")
    if any(abs(v) > _ENTRY_BOUND for v in f.vec):
        raise OverflowError("class coefficients too large for the decomposition loop")
    vecs, gram, amp = neg._arrays()
    if order is not None:
        order = np.asarray(order, dtype=np.intp)
        vecs = vecs[order]
        gram = gram[order]
        labels = [neg.classes[i] for i in order]
    else:
        labels = list(neg.classes)

    h = np.array(f.vec, dtype=np.int64)
    counts: dict[int, int] = {}
    pot = int(amp @ h)
    while True:
        if h.any():
            if pot <= 0:
                return ZariskiResult(f, False, None, (), 0)
        else:
            return _finish(f, h, counts, labels)
        dots = gram @ h
        viol = np.nonzero(dots < 0)[0]
        if viol.size == 0:
            return _finish(f, h, counts, labels)
        i = int(viol[0])
        h -= vecs[i]
        counts[i] = counts.get(i, 0) + 1
        new_pot = int(amp @ h)
        if new_pot >= pot:
            raise ConsistencyError("ample pairing failed to decrease; "
                                   "the negative set is not ample-positive")
        pot = new_pot


def _finish(f, h, counts, labels):
    nef = DivisorClass(int(h[0]), tuple(int(v) for v in h[1:]))
    fixed = tuple(sorted(((labels[i], k) for i, k in counts.items()),
                         key=lambda ck: ck[0].vec))
    return ZariskiResult(f, True, nef, fixed, riemann_roch_value(nef))


def h0(f: DivisorClass, neg: NegSet) -> int:
    return decompose(f, neg).h0


def is_nef(f: DivisorClass, neg: NegSet) -> bool:
    """True iff f meets every prime negative class nonnegatively.

    Sufficient for nefness because the negative classes generate the
    effective cone in the supported regimes.
    """
    if f.r <= 1:
        if f.r == 0:
            return f.d >= 0
        return f.d >= f.mults[0] and f.mults[0] >= 0
    if f.r != neg.r:
        raise DimensionError(f"class r={f.r} vs negative set r={neg.r}")
    vecs, gram, _ = neg._arrays()
    return bool((gram @ np.array(f.vec, dtype=np.int64) >= 0).all())
