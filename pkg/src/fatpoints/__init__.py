"""Configuration types of plane point sets and Hilbert functions of fat points."""

from .lattice import (DivisorClass, ample_reference, canonical_class,
                      fat_point_class, intersect, riemann_roch_value,
                      scheme_degree)
from .catalog import CONIC, EIGHT_POINTS, negative_candidates
from .configtype import (ConfigurationType, builtin, canonical_form,
                         enumerate_types, parse_notation, validate)

__version__ = "0.1.0"

__all__ = [
    "DivisorClass", "ConfigurationType",
    "ample_reference", "canonical_class", "fat_point_class", "intersect",
    "riemann_roch_value", "scheme_degree",
    "CONIC", "EIGHT_POINTS", "negative_candidates",
    "builtin", "canonical_form", "enumerate_types", "parse_notation", "validate",
    "__version__",
]
