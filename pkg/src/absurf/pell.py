"""Continued fractions of sqrt(n) and fundamental Pell solutions.

The solver targets x^2 - n*y^2 = 1 only.  Components grow exponentially
with n (n = 61 already needs ten-digit numbers), so everything stays in
Python's arbitrary-precision integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .errors import PerfectSquare


@dataclass(frozen=True)
class ContinuedFraction:
    """Periodic expansion sqrt(n) = [integer_part; (period)]."""

    integer_part: int
    period: tuple[int, ...]

    def __post_init__(self):
        if not self.period:
            raise ValueError("period must be nonempty")
        # standard structure of sqrt(n) expansions, kept as a self-check
        if self.period[-1] != 2 * self.integer_part:
            raise ValueError(
                f"period must end with {2 * self.integer_part}, got {self.period[-1]}"
            )


@dataclass(frozen=True)
class PellSolution:
    """Fundamental (minimal y >= 1) solution of x^2 - n*y^2 = 1."""

    n: int
    x: int
    y: int

    def __post_init__(self):
        if self.x * self.x - self.n * self.y * self.y != 1:
            raise ValueError(f"({self.x}, {self.y}) does not solve x^2-{self.n}*y^2=1")
        if self.y < 1:
            raise ValueError("fundamental solution needs y >= 1")


def _require_nonsquare(n: int) -> int:
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    root = isqrt(n)
    if root * root == n:
        raise PerfectSquare(f"{n} = {root}^2 is a perfect square")
    return root


def continued_fraction_sqrt(n: int) -> ContinuedFraction:
    """Expand sqrt(n) with the exact (m, d, a) recurrence.

    m' = d*a - m, d' = (n - m'^2)/d, a' = floor((a0 + m')/d'); the period
    is complete at the first return of d to 1.
    """
    a0 = _require_nonsquare(n)
    period = []
    m, d, a = 0, 1, a0
    while True:
        m = d * a - m
        d = (n - m * m) // d
        a = (a0 + m) // d
        period.append(a)
        if d == 1:
            return ContinuedFraction(a0, tuple(period))


def convergents(cf: ContinuedFraction, count: int) -> list[tuple[int, int]]:
    """First `count` convergents p/q of sqrt(n), cycling the period."""
    terms = [cf.integer_part]
    while len(terms) < count:
        terms.extend(cf.period)
    p_prev, q_prev = 1, 0
    p, q = terms[0], 1
    out = [(p, q)]
    for a in terms[1:count]:
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
        out.append((p, q))
    return out


def pell_fundamental(n: int) -> PellSolution:
    """Fundamental solution of x^2 - n*y^2 = 1 from the convergents.

    The convergent closing the first period solves x^2 - n*y^2 = (-1)^r
    for period length r; odd r needs the second period.
    """
    _require_nonsquare(n)
    cf = continued_fraction_sqrt(n)
    r = len(cf.period)
    index = r if r % 2 == 0 else 2 * r
    x, y = convergents(cf, index)[-1]
    return PellSolution(n, x, y)
