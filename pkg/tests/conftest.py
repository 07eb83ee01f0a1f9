"""Shared independent oracles for the test suite.

These deliberately avoid the library's own code paths: the Pell oracle is
an exhaustive scan, the elliptic-square oracle a bound-free enumeration,
and the shoelace oracle plain Fraction arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt


def pell_brute(n: int, y_limit: int) -> tuple[int, int] | None:
    """Minimal-y solution of x^2 - n*y^2 = 1 by exhaustive scan."""
    for y in range(1, y_limit + 1):
        t = n * y * y + 1
        x = isqrt(t)
        if x * x == t:
            return x, y
    return None


def naive_elliptic_eps(b1: int, b2: int, b3: int) -> Fraction:
    """Three-way minimum with a plain double loop and no coprimality cut.

    Scans all pairs 1 <= c, d <= 2*(a1+a2) subject only to the strict
    constraint 2*(c+d)^2 < (a1+a2)^2; non-coprime pairs only scale
    admissible values up, so the minimum is unaffected.
    """
    a1, a2, a3 = sorted((b1, b2, b3), reverse=True)
    total = a1 + a2
    candidates = [
        Fraction(a2 + a3),
        Fraction(a2 * a1 ** 2 + a1 * a2 ** 2 + a3 * total ** 2, (_gcd(a1, a2)) ** 2),
    ]
    box = 2 * total
    bound = total * total
    for c in range(1, box + 1):
        for d in range(1, box + 1):
            if 2 * (c + d) ** 2 < bound:
                candidates.append(Fraction(a1 * d * d + a2 * c * c + a3 * (c + d) ** 2))
    return min(candidates)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def frac_shoelace(points: list[tuple[Fraction, Fraction]]) -> Fraction:
    """Absolute shoelace area of a rational polygon, any orientation."""
    doubled = Fraction(0)
    n = len(points)
    for i in range(n):
        x1, y1 = points[i]
        x2, y2 = points[(i + 1) % n]
        doubled += x1 * y2 - x2 * y1
    return abs(doubled) / 2
