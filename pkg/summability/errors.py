"""
Exception types for the summability package.

Everything derives from ValueError so callers that already catch bad input
as ValueError keep working.
"""


class SummabilityError(ValueError):
    """Base class for all library errors."""


class DomainError(SummabilityError):
    """A parameter lies outside the domain of a generating function or formula."""


class PoleError(DomainError):
    """A closed form was evaluated at its pole (alpha = 1 for Karamata column sums)."""


class GradeMismatchError(SummabilityError):
    """Two pi-graded values of different grade were added, or a grade went negative."""


class SeriesError(SummabilityError):
    """A truncated series was malformed or combined with an incompatible one."""


class NotInvertibleError(SeriesError):
    """1 - f is not formally invertible because f(0) = 1."""
