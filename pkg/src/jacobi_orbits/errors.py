"""Exception types shared across the package."""


class JacobiOrbitsError(Exception):
    """Base class for all package-specific errors."""


class SingularMatrixError(JacobiOrbitsError):
    """Matrix inversion was requested for a singular matrix."""


class NotUnimodularError(JacobiOrbitsError, ValueError):
    """A group element was built with ad - bc != 1."""


class NotOnComplexCircleError(JacobiOrbitsError, ValueError):
    """A complexified-rotation element was built with a^2 + b^2 != 1."""


class ZeroElementError(JacobiOrbitsError, ValueError):
    """An operation requires a nonzero element."""


class NotNilpotentError(JacobiOrbitsError, ValueError):
    """An operation requires a nilpotent element."""


class NotKsRealError(JacobiOrbitsError, ValueError):
    """The Cayley transform requires a real KS-triple."""


class NotNilpotentLabelError(JacobiOrbitsError, ValueError):
    """The orbit-level correspondence is defined on nilpotent labels only."""


class UnknownSetIdError(JacobiOrbitsError, KeyError):
    """No closed-form orbit-set description is registered under this id."""


class InternalInconsistencyError(JacobiOrbitsError, RuntimeError):
    """A self-check failed; this signals a bug, not bad user input."""
