"""Continued fractions of sqrt(n) and fundamental Pell solutions."""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

import mpmath
import pytest

from absurf import (
    PerfectSquare,
    continued_fraction_sqrt,
    convergents,
    pell_fundamental,
)
from conftest import pell_brute


def test_continued_fraction_examples():
    cf2 = continued_fraction_sqrt(2)
    assert (cf2.integer_part, cf2.period) == (1, (2,))
    cf12 = continued_fraction_sqrt(12)
    assert (cf12.integer_part, cf12.period) == (3, (2, 6))
    with pytest.raises(PerfectSquare):
        continued_fraction_sqrt(9)


def test_convergents_approach_sqrt2():
    cf = continued_fraction_sqrt(2)
    with mpmath.workdps(50):
        target = mpmath.sqrt(2)
        previous = None
        for p, q in convergents(cf, 12):
            error = abs(mpmath.mpf(p) / q - target)
            if previous is not None:
                assert error < previous
            previous = error
        assert previous < mpmath.mpf("1e-8")


def test_fundamental_examples_against_bruteforce():
    assert pell_brute(2, 100) == (3, 2)
    assert pell_brute(12, 100) == (7, 2)
    sol2 = pell_fundamental(2)
    assert (sol2.x, sol2.y) == (3, 2)
    sol12 = pell_fundamental(12)
    assert (sol12.x, sol12.y) == (7, 2)
    with pytest.raises(PerfectSquare):
        pell_fundamental(4)


def test_fundamental_matches_bruteforce_small():
    for n in range(2, 80):
        if isqrt(n) ** 2 == n:
            continue
        sol = pell_fundamental(n)
        assert sol.x * sol.x - n * sol.y * sol.y == 1
        assert pell_brute(n, sol.y) == (sol.x, sol.y)


def test_classical_large_case_n61():
    # classical minimal solution with ten-digit components; the equation
    # check below verifies the pair from first principles
    sol = pell_fundamental(61)
    assert (sol.x, sol.y) == (1766319049, 226153980)
    assert sol.x ** 2 - 61 * sol.y ** 2 == 1


def test_period_self_check_to_500():
    for n in range(2, 501):
        if isqrt(n) ** 2 == n:
            continue
        cf = continued_fraction_sqrt(n)
        assert cf.period[-1] == 2 * cf.integer_part


def test_period_end_convergent_solves_pm1():
    for n in range(2, 201):
        if isqrt(n) ** 2 == n:
            continue
        cf = continued_fraction_sqrt(n)
        p, q = convergents(cf, len(cf.period))[-1]
        assert abs(p * p - n * q * q) == 1


def test_odd_period_needs_second_period():
    # n = 13 has period (1, 1, 1, 1, 6) of odd length; the first period
    # closes at x^2 - 13 y^2 = -1
    cf = continued_fraction_sqrt(13)
    assert len(cf.period) % 2 == 1
    p, q = convergents(cf, len(cf.period))[-1]
    assert p * p - 13 * q * q == -1
    sol = pell_fundamental(13)
    assert (sol.x, sol.y) == pell_brute(13, sol.y)


def test_convergents_are_reduced():
    cf = continued_fraction_sqrt(19)
    for p, q in convergents(cf, 10):
        assert q >= 1
        assert Fraction(p, q).denominator == q  # already in lowest terms


def test_rejects_nonpositive():
    with pytest.raises(ValueError):
        continued_fraction_sqrt(0)
    with pytest.raises(ValueError):
        pell_fundamental(-3)
