"""Exception hierarchy.

Everything a caller can trigger with bad input derives from
:class:`OrbifoldError` (a ``ValueError``).  :class:`InvariantViolation` is
reserved for internal consistency checks that should never fire.
"""


class OrbifoldError(ValueError):
    pass


class DomainError(OrbifoldError):
    pass


class SurfaceMismatch(OrbifoldError):
    pass


class NotCoprime(OrbifoldError):
    pass


class NoConePoints(OrbifoldError):
    pass


class NotSmooth(OrbifoldError):
    pass


class InvariantViolation(RuntimeError):
    """An identity that holds by construction was found to fail."""
