"""Exception types shared across the package."""


class DegenerateError(ValueError):
    """Input geometry is degenerate (zero-length segment, equal points, ...)."""


class DimensionError(ValueError):
    """Objects of incompatible dimension were combined."""


class CertificateError(ValueError):
    """A certificate is malformed (bad indices, wrong lengths)."""


class InvariantError(AssertionError):
    """An internal guarantee failed at runtime.

    Raised instead of a bare ``assert`` so the check survives ``python -O``.
    """


class SearchExhausted(RuntimeError):
    """A randomized or parameter search ran out of attempts."""


class CapExceeded(RuntimeError):
    """An exact oracle was asked to solve an instance above its size cap."""
