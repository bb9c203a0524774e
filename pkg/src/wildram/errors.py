"""Exception types raised across the package."""


class WildramError(ValueError):
    pass


class NotPIntegralError(WildramError):
    """A rational with negative p-adic valuation was reduced modulo p."""


class OddPrimeRequired(WildramError):
    """The operation is only defined for odd primes."""


class NonZeroConstantTermError(WildramError):
    pass


class LinearCoefficientError(WildramError):
    """The series does not have the required linear coefficient."""


class InsufficientPrecisionError(WildramError):
    pass


class HypothesisError(WildramError):
    """A precondition of a closed-form ramification result failed.

    ``hypothesis`` names the failing condition.
    """

    def __init__(self, hypothesis, message):
        super().__init__(message)
        self.hypothesis = hypothesis


class SeriesSyntaxError(WildramError):
    pass
