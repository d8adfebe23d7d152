"""Exception types shared across the package."""


class SpsurfError(Exception):
    """Base class for all package-specific errors."""


class ConfigurationError(SpsurfError):
    """Operands belong to incompatible rings (different g or modulus)."""


class ResourceGuardError(SpsurfError):
    """Requested (n, g) exceeds the monomial-count guard."""


class DegreeError(SpsurfError):
    """An operation received elements of the wrong degree."""


class BuildError(SpsurfError):
    """The quotient construction hit a state it cannot certify.

    Raised when integer elimination cannot produce a unit pivot, which
    would contradict torsion-freeness of the quotient.
    """


class UndeterminedPairingError(SpsurfError):
    """A cohomology/homology pairing was queried outside the stored table."""


class RuleConflictError(SpsurfError):
    """Two classification rules asserted contradictory statuses."""
