"""Exception types shared across the package.

Every validation failure names the violated invariant and carries the
measured violation, so callers can report diagnostics without re-deriving
them.
"""

from __future__ import annotations


class DiscordBoundsError(Exception):
    """Base class for all package-specific errors."""


class DimsError(DiscordBoundsError):
    """Matrix shape is incompatible with the declared subsystem dimensions."""


class NotSquareError(DimsError):
    """Operator matrix is not square."""


class NonHermitianError(DiscordBoundsError):
    """Hermiticity deviation exceeds tolerance."""

    def __init__(self, message: str, deviation: float | None = None):
        super().__init__(message)
        self.deviation = deviation


class TraceError(DiscordBoundsError):
    """Trace differs from 1 beyond tolerance."""

    def __init__(self, message: str, excess: float | None = None):
        super().__init__(message)
        self.excess = excess


class NotPSDError(DiscordBoundsError):
    """A negative eigenvalue beyond tolerance was found."""

    def __init__(self, message: str, min_eigenvalue: float | None = None):
        super().__init__(message)
        self.min_eigenvalue = min_eigenvalue


class InvalidOrderError(DiscordBoundsError):
    """Schatten order p < 1 requested."""


class PPTError(DiscordBoundsError):
    """The partial transpose has no negative eigenvalue at tolerance.

    Carries the smallest partial-transpose eigenvalue for diagnostics.
    """

    def __init__(self, message: str, lambda_min: float | None = None):
        super().__init__(message)
        self.lambda_min = lambda_min


class DegenerateWitnessError(DiscordBoundsError):
    """Witness has zero sup norm and cannot be normalized."""


class DomainError(DiscordBoundsError):
    """Witness lies outside the -I <= W <= I domain required by the check."""

    def __init__(self, message: str, sup_norm: float | None = None):
        super().__init__(message)
        self.sup_norm = sup_norm


class UnsupportedDimsError(DiscordBoundsError):
    """Closed-form path requested for dimensions it does not cover."""


class ProvenBoundViolationError(DiscordBoundsError):
    """A bound that holds mathematically was reported violated.

    This signals an implementation defect, never a discovery; ensemble
    drivers abort instead of collecting the report as a certificate.
    The offending report is attached for the diagnostic dump.
    """

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class FileFormatError(DiscordBoundsError):
    """A state/witness/certificate document failed to parse or validate."""


class ConfigError(DiscordBoundsError):
    """Invalid command-line configuration (maps to exit code 64)."""
