"""Exception types shared across the package.

Every guard and precondition in the public API raises one of these, so
callers (and the CLI) can tell invalid parameters apart from tripped
size guards.
"""


class DeepholeError(Exception):
    """Base class for all package-specific errors."""


# -- field construction / arithmetic ----------------------------------------

class NonPrime(DeepholeError, ValueError):
    pass


class NotIrreducible(DeepholeError, ValueError):
    pass


class TooLarge(DeepholeError, ValueError):
    """Field order exceeds the desk-scale cap q <= 2**20."""


class DivisionByZero(DeepholeError, ZeroDivisionError):
    pass


class FieldMismatch(DeepholeError, ValueError):
    """Operands belong to different fields."""


# -- polynomial layer --------------------------------------------------------

class NonMonicDivisor(DeepholeError, ValueError):
    pass


class ZeroPolynomial(DeepholeError, ValueError):
    pass


class ArityMismatch(DeepholeError, ValueError):
    """Point length does not match the number of variables."""


class IndexOutOfRange(DeepholeError, ValueError):
    pass


class TooManyVariables(DeepholeError, ValueError):
    """Symbolic expansion would exceed the configured term cap."""


class CapExceeded(DeepholeError, ValueError):
    """Symbolic identity check requested beyond the supported size."""


# -- code layer ---------------------------------------------------------------

class DegreeTooHigh(DeepholeError, ValueError):
    pass


class DegreeOutOfRange(DeepholeError, ValueError):
    pass


class TooLargeForBruteForce(DeepholeError, ValueError):
    """q**k exceeds the exhaustive-decoding guard."""


# -- witness layer ------------------------------------------------------------

class InvalidDimensions(DeepholeError, ValueError):
    pass


class NotAWitness(DeepholeError, ValueError):
    """Candidate point fails the witness preconditions."""


class TooLargeForExhaustive(DeepholeError, ValueError):
    """q**(k+1) exceeds the exhaustive-scan guard."""


class HypothesisViolated(DeepholeError, ValueError):
    """A named hypothesis of the monomial construction fails."""

    def __init__(self, name):
        self.name = name
        super().__init__(f"hypothesis violated: {name}")


class InsufficientTraceZeroElements(DeepholeError, ValueError):
    pass


# -- bounds layer ---------------------------------------------------------------

class InvalidParams(DeepholeError, ValueError):
    pass
