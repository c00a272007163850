"""Exception and warning types raised across the package."""

from __future__ import annotations


class CospectraError(ValueError):
    """Base class for all validation errors."""


class NotSquare(CospectraError):
    pass


class OrderMismatch(CospectraError):
    pass


class ShapeMismatch(CospectraError):
    pass


class ZeroPolynomial(CospectraError):
    pass


class ZeroVector(CospectraError):
    pass


class _IndexedError(CospectraError):
    """Validation error pinned to a matrix position."""

    label = "invalid entry"

    def __init__(self, index: tuple[int, int], detail: str = ""):
        self.index = index
        msg = f"{self.label} at {index}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class NotSymmetric(_IndexedError):
    label = "matrix not symmetric"


class NonBinaryEntry(_IndexedError):
    label = "entry not in {0,1}"


class NonzeroDiagonal(_IndexedError):
    label = "nonzero diagonal entry"


class OrderTooLarge(CospectraError):
    pass


class MalformedGraph6(CospectraError):
    pass


class MalformedSeed(CospectraError):
    pass


class LabelCountMismatch(CospectraError):
    pass


class ShapeViolation(CospectraError):
    pass


class NotADivisor(CospectraError):
    pass


class EFSumViolation(CospectraError):
    pass


class SeedValidationError(CospectraError):
    pass


class DegenerateSeed(UserWarning):
    """Seed matrix is all zero; the construction yields edgeless graphs."""
