"""Error types shared across the package."""

from __future__ import annotations


class GwgrError(Exception):
    """Base class for all package errors."""


class InvalidGrassmannian(GwgrError):
    """Raised when (r, k) does not satisfy 1 <= r < k."""


class DimensionMismatch(GwgrError):
    """Exponents do not match the moduli-space dimension for (g, d, r, k)."""


class NonIntegerResult(GwgrError):
    """A floating value failed to round to an integer within tolerance."""

    def __init__(self, message: str, residual: float):
        super().__init__(message)
        self.residual = residual


class PrecisionBudgetExceeded(GwgrError):
    """kd is too large for the double-precision residue pipelines."""


class ValidationFailure(GwgrError):
    """A critical-point validation bound was violated."""


class PipelineNotApplicable(GwgrError):
    """A requested pipeline does not apply to the query's (g, r)."""


class CrossCheckMismatch(GwgrError):
    """Two pipelines returned different integers for the same query."""

    def __init__(self, message: str, values: dict[str, int]):
        super().__init__(message)
        self.values = values


class NonUnitConstantTerm(GwgrError):
    """Series inversion requires constant term equal to one."""


class TruncationTooLow(GwgrError):
    """A series was not truncated high enough for the requested coefficient."""
