"""Exact calculator for the cohomology of symmetric products of surfaces.

Computes the integral cohomology ring of SP^n(M_g) for a closed orientable
genus-g surface M_g, its characteristic classes, LS-category, topological
complexity, spin data, and curvature/macroscopic-dimension classifications,
together with a verifier that machine-checks the underlying ring identities.
"""

from .errors import (BuildError, ConfigurationError, DegreeError,
                     ResourceGuardError, RuleConflictError, SpsurfError,
                     UndeterminedPairingError)
from .macdonald import MacdonaldRing, RelationInstance, build
from .ring import GeneratorId, Monomial, RingElement

__all__ = [
    "BuildError",
    "ConfigurationError",
    "DegreeError",
    "GeneratorId",
    "MacdonaldRing",
    "Monomial",
    "RelationInstance",
    "ResourceGuardError",
    "RingElement",
    "RuleConflictError",
    "SpsurfError",
    "UndeterminedPairingError",
    "build",
]

__version__ = "0.1.0"
