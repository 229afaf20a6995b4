"""Completion of a type's negative classes to the full set of prime
negative classes on the blow-up.

A configuration type records the classes of self-intersection <= -2; the
remaining prime classes of negative self-intersection are exactly the
square -1 candidates meeting every member of the type nonnegatively.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from . import catalog
from .configtype import ConfigurationType
from .errors import RangeError
from .lattice import ample_reference


class NegSet:
    """All prime negative classes for one type, in a fixed lexicographic
    order, with cached integer matrices for the decomposition loop."""

    __slots__ = ("r", "mode", "classes", "source_type", "_gram", "_vecs", "_ample")

    def __init__(self, r, mode, classes, source_type):
        self.r = r
        self.mode = mode
        self.classes = tuple(sorted(classes, key=lambda c: c.vec))
        self.source_type = source_type
        self._gram = None
        self._vecs = None
        self._ample = None

    def __iter__(self):
        return iter(self.classes)

    def __len__(self):
        return len(self.classes)

    @property
    def prime_classes(self):
        return self.classes

    def _arrays(self):
        # gram rows g with g @ (d, m1..mr) = pairing against each class
        if self._gram is None:
            vecs = np.array([c.vec for c in self.classes], dtype=np.int64)
            if vecs.size == 0:
                vecs = np.zeros((0, self.r + 1), dtype=np.int64)
            gram = vecs.copy()
            gram[:, 1:] *= -1
            amp = np.array(ample_reference(self.r).vec if self.r >= 2 else [], dtype=np.int64)
            if amp.size:
                amp[1:] *= -1
            self._vecs, self._gram, self._ample = vecs, gram, amp
        return self._vecs, self._gram, self._ample

    def to_json(self):
        return [c.to_json() for c in self.classes]


@lru_cache(maxsize=4096)
def complete(t: ConfigurationType) -> NegSet:
    """Adjoin the compatible square -1 candidates to the type's classes."""
    if t.mode == catalog.EIGHT_POINTS and not 1 <= t.r <= 8:
        raise RangeError(f"eight-point completion needs 1 <= r <= 8, got {t.r}")
    members = list(t.neg_classes)
    adjoined = [c for c in catalog.minus_one_candidates(t.r, t.mode)
                if all(c.dot(d) >= 0 for d in members)]
    return NegSet(t.r, t.mode, members + adjoined, t)
