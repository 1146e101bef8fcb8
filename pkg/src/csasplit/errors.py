"""Exception types shared across the package."""


class CsaSplitError(Exception):
    """Base class for all structured errors raised by this package."""


class NonUnitError(CsaSplitError):
    """Raised when an element expected to be invertible is a zero divisor.

    ``witness`` is a nonzero annihilator: witness * offending element = 0.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class UnsupportedDegreeError(CsaSplitError):
    """A field component of degree 3 or more arose; out of scope."""


class DiscriminantTooLargeError(CsaSplitError):
    """A quadratic component exceeds the configured discriminant bound."""


class MaxTriesExceededError(CsaSplitError):
    """Randomised search exhausted its retry budget."""


class SingularSystemError(CsaSplitError):
    """A linear system that should be uniquely solvable was not."""


class NotACoboundaryError(CsaSplitError):
    """The cocycle has no trivialisation; the algebra is not split."""


class NotInKernelError(CsaSplitError):
    """Divisor is not in the kernel of the degree-raising map."""


class RamifiedSupportError(CsaSplitError):
    """Divisor support meets places above ramified primes."""


class MalformedInputError(CsaSplitError):
    """Input JSON does not match the documented schemas."""
