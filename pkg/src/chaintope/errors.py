"""Exception types raised by chaintope."""


class ChaintopeError(Exception):
    pass


class NonGeneric(ChaintopeError, ValueError):
    """A signed sum of the length vector vanishes."""


class EmptyPolytope(ChaintopeError, ValueError):
    """The anchor is too long: the chain space is empty."""


class BadDelta(ChaintopeError, ValueError):
    pass


class OutOfRange(ChaintopeError, ValueError):
    pass


class NotNormalized(ChaintopeError, ValueError):
    pass


class NotAdmissible(ChaintopeError, ValueError):
    pass


class PreconditionViolated(ChaintopeError, ValueError):
    pass


class DimensionTooSmall(ChaintopeError, ValueError):
    pass


class TooLarge(ChaintopeError, ValueError):
    pass


class SizeCap(TooLarge):
    pass


class NotTriangleFree(ChaintopeError, ValueError):
    pass


class NotSimple(ChaintopeError, ValueError):
    pass


class WrongCode(ChaintopeError, ValueError):
    pass


class Inconsistent(ChaintopeError, ValueError):
    pass


class InternalMismatch(ChaintopeError, AssertionError):
    """Two independent computations of the same fact disagree."""
