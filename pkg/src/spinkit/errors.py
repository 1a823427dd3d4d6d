"""Exception types shared across the package."""


class SpinkitError(Exception):
    """Base class for all package-specific errors."""


class DimensionMismatchError(SpinkitError, ValueError):
    """Operands live in different algebras or have incompatible shapes."""


class UnsupportedDimensionError(SpinkitError, ValueError):
    """Requested generator count outside the supported range."""


class InvalidSpinElementError(SpinkitError, ValueError):
    """Element fails the spin-group invariants (even, unit norm, grade-preserving)."""


class LiftError(SpinkitError, ValueError):
    """Rotation cannot be lifted as requested (orientation or rationality)."""


class ChiralityError(SpinkitError, ValueError):
    """Operand does not respect the chiral splitting it claims."""


class EmbeddingDomainError(SpinkitError, ValueError):
    """Element lies outside the even Cl(0,7) copy inside Cl(0,8)."""


class InternalCheckError(SpinkitError, AssertionError):
    """A construction self-check failed; indicates a bug, not bad input."""


class ResidueError(SpinkitError, ValueError):
    """Cochain inputs are inconsistent with a relative cochain on the product pair."""


class ComplexValidationError(SpinkitError, ValueError):
    """Cell complex data violates the boundary or subcomplex axioms."""


class TorsorError(SpinkitError, ValueError):
    """Difference table or action table fails the torsor axioms."""


class CensusDataError(SpinkitError, ValueError):
    """Characteristic-class record violates a validation rule or precondition."""
