"""Exception types shared across the package."""


class G2ConeError(Exception):
    """Base class for all package errors."""


class CalibrationFailed(G2ConeError):
    """No sign assignment reproduces the structure identities."""


class VerticalComponent(G2ConeError):
    """Operation requires a horizontal (e-frame only) or projectable form."""


class DegreeMismatch(G2ConeError):
    """Form degrees incompatible with the requested operation."""


class NotPrimitive(G2ConeError):
    """2-form is not a primitive (1,1)-form."""


class NotUnitLeading(G2ConeError):
    """Deformed 3-form does not reduce to the cone 3-form at s=0."""


class IdentityFailed(G2ConeError):
    """A symbolic identity check failed; carries the residual."""

    def __init__(self, name, residual=None):
        super().__init__(f"identity failed: {name}")
        self.name = name
        self.residual = residual


class MismatchWithPaper(G2ConeError):
    """Computed table entry differs from the transcribed fixture."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class NotInImage(G2ConeError):
    """2-form falls outside the identified su(3) subspace of primitive forms."""


class Resonance(G2ConeError):
    """Decaying characteristic root vanishes; mode cannot be inverted."""


class TailTruncation(G2ConeError):
    """Grid tail of the forcing is too large for the requested tolerance."""


class NoContraction(G2ConeError):
    """Fixed-point iteration is not contracting (offset T too small)."""


class Diverged(G2ConeError):
    """Fixed-point iteration diverged."""


class RateMismatch(G2ConeError):
    """Slow-rate profile failed to stabilise at the expected limit."""
