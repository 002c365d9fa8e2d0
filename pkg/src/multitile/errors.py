"""Exception hierarchy shared across the package."""


class MultitileError(Exception):
    """Base class for all errors raised by this package."""


class DegenerateInput(MultitileError):
    """Input points do not span the ambient space."""


class DimensionMismatch(MultitileError):
    pass


class Unsupported(MultitileError):
    """The operation is not available for this dimension or body type."""


class SingularMatrix(MultitileError):
    pass


class ZeroVector(MultitileError):
    pass


class NotPrimitive(MultitileError):
    pass


class EmptySet(MultitileError):
    pass


class NotOriginSymmetric(MultitileError):
    def __init__(self, message, vertex=None):
        super().__init__(message)
        self.vertex = vertex


class EvenInteriorCount(MultitileError):
    """An o-symmetric body reported an even number of interior lattice points."""


class DegenerateBase(MultitileError):
    pass


class NotATiling(MultitileError):
    pass


class ParseError(MultitileError):
    """A polytope or certificate file could not be read."""
