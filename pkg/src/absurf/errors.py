"""Exception taxonomy shared across the package.

``ParseError`` and ``InvalidSpec`` flag bad user input; the remaining
classes flag domain preconditions violated by otherwise well-formed
values.  The CLI maps the former to exit code 2 and the latter to 3.
"""


class AbsurfError(Exception):
    """Base class for every error raised by this package."""


class ParseError(AbsurfError):
    """Malformed scalar, surface-spec string, or sweep plan."""


class InvalidSpec(AbsurfError):
    """A surface description violating its own invariants."""


class IncompatibleRadicands(AbsurfError):
    """Arithmetic or comparison mixing two distinct irrational radicands."""


class NegativeRadicand(AbsurfError):
    """Square root of a negative rational requested."""


class PerfectSquare(AbsurfError):
    """Pell equation or sqrt continued fraction asked for a square n."""


class NotAmple(AbsurfError):
    """Elliptic-square divisor coefficients fail the ampleness test."""


class NonPositiveLength(AbsurfError):
    """Inverted simplex with length <= 0."""


class MultiplicityTooSmall(AbsurfError):
    """Bounding triangle needs multiplicity q >= 2."""


class EpsOutOfRange(AbsurfError):
    """Region parameter eps outside the open interval (1, 2)."""


class ParameterOrderViolation(AbsurfError):
    """Region parameters violating 1 < eps < alpha < 2."""


class UnsupportedSpec(AbsurfError):
    """Operation not defined for this surface class."""
