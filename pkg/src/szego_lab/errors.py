"""Exception types shared across the library."""


class SzegoLabError(Exception):
    """Base class for all library-specific failures."""


class NotPositiveDefinite(SzegoLabError):
    """The autocovariance sequence fails positive definiteness at some order."""


class InvalidCoefficient(SzegoLabError):
    """A partial autocorrelation lies outside the open unit disc."""


class ZeroLeadingCoefficient(SzegoLabError):
    """Series reciprocal requested for a series with zero constant term."""


class NegativeDensity(SzegoLabError):
    """Spectral synthesis produced significantly negative density values."""


class NonpositiveDensity(SzegoLabError):
    """An operation requiring log w received a density with zero or
    near-zero grid values."""


class TruncationUnstable(SzegoLabError):
    """Doubling the operator truncation moved the result by more than the
    tolerance; the coefficient decay is insufficient."""


class TruncationTooShort(SzegoLabError):
    """Moving-average truncation fails the tail-energy criterion."""


class InsufficientData(SzegoLabError):
    """Not enough usable points for the requested estimate."""


class OutOfRange(SzegoLabError):
    """Parameter outside its admissible interval."""


class NoClosedForm(SzegoLabError):
    """No closed form implemented for this model; use the numeric route."""


class InvalidModel(SzegoLabError):
    """Model parameters violate stationarity or validity constraints."""
