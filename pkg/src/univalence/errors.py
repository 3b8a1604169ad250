"""Exception types shared across the package."""


class UnivalenceError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(UnivalenceError, ValueError):
    """A parameter lies outside the hypothesis of the requested formula."""


class ZeroConstantTerm(UnivalenceError, ZeroDivisionError):
    """Reciprocal requested for a series whose constant term vanishes."""


class VanishingA2(DomainError):
    """The g-transform divides by a2, which is (numerically) zero."""


class PoleAtSample(UnivalenceError, ArithmeticError):
    """f(z)/z vanishes at a sample point, so z/f(z) is not finite there."""


class NotInU(UnivalenceError, ValueError):
    """The sampled Schwarz bound |omega(z)| <= |z| fails."""


class ZeroDenominator(UnivalenceError, ValueError):
    """1 - a2 z - z omega(z) vanishes inside the validation disk."""


class NoBracket(UnivalenceError, ValueError):
    """Root finder could not establish a sign change."""
