"""Exception hierarchy shared across the library.

Every exception carries a human-readable message; where a structural check
fails on specific elements, the offending indices are embedded in the message
so the caller never has to re-derive the counterexample.
"""

from __future__ import annotations


class RBPairError(Exception):
    """Base class for all library-specific errors."""


class ExactnessError(RBPairError, TypeError):
    """A value that is not an exact rational (e.g. a float) was supplied."""


class DimensionMismatchError(RBPairError, ValueError):
    """Operands have incompatible shapes or ambient dimensions."""


class MalformedInputError(RBPairError, ValueError):
    """A serialized object violates its wire format."""


class NotClosedError(RBPairError):
    """A subspace or subset is not closed under the operation in question."""

    def __init__(self, message: str, witness: str | None = None):
        super().__init__(message)
        self.witness = witness


class NotAnIdealError(NotClosedError):
    """A subspace fails the ideal property needed for a quotient."""


class NotNormalError(NotClosedError):
    """A subgroup fails normality inside the group being quotiented."""


class WeightUnsupportedError(RBPairError, ValueError):
    """The requested construction is only defined for specific weights."""


class RepresentativeDisagreementError(RBPairError):
    """A map defined through representatives gave different answers for
    different preimages of the same element."""

    def __init__(self, message: str, witness: str | None = None):
        super().__init__(message)
        self.witness = witness


class OrderBoundExceededError(RBPairError, ValueError):
    """A group exceeds the configured enumeration bound."""


class NotComplementaryError(RBPairError, ValueError):
    """Two subspaces were expected to decompose the ambient space."""


class AxiomsFailedError(RBPairError):
    """A structure handed to a constructor fails its defining axioms.

    Carries the report so the caller can see which axiom broke.
    """

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report
