"""Exception hierarchy shared by all fatpoints modules."""


class FatPointsError(Exception):
    """Base class for all domain errors raised by this package."""


class DimensionError(FatPointsError):
    """Two divisor classes (or a class and a family) live on different blow-ups."""


class RangeError(FatPointsError):
    """A point count r is outside the supported range for the requested mode."""


class InvalidTypeError(FatPointsError):
    """A class set fails the configuration-type axioms."""


class NotationError(FatPointsError):
    """A textual type description does not parse."""


class TableLookupError(FatPointsError):
    """An (r, index) pair names no built-in table row."""


class EmptySchemeError(FatPointsError):
    """All multiplicities are zero, so there is no subscheme to measure."""


class BettiUnsupportedError(FatPointsError):
    """Graded Betti numbers were requested outside the regime where they
    are determined by the configuration type."""


class GeometryError(FatPointsError):
    """Bad point data: coincident points, non-projective triples, bad field."""


class ConsistencyError(FatPointsError):
    """An internal cross-check failed; indicates a bug, not bad input."""
