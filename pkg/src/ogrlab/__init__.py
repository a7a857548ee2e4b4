"""ogrlab: exact computation with positive orthogonal Grassmannians."""

from . import (
    exact_core,
    errors,
    forms_points,
    ideal_gens,
    ogr1,
    orthopositroids,
    parity_duality,
    posets,
    weyl,
)

__all__ = [
    "exact_core",
    "errors",
    "forms_points",
    "ideal_gens",
    "ogr1",
    "orthopositroids",
    "parity_duality",
    "posets",
    "weyl",
]

__version__ = "0.1.0"
