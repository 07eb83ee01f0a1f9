"""The criterion engine: rules, verdicts, regimes and their coherence."""

from __future__ import annotations

import random
from fractions import Fraction
from math import isqrt

import mpmath
import pytest

from absurf import (
    EllipticSquare,
    Explicit,
    InvalidSpec,
    NotAmple,
    PicardOne,
    QuadraticValue,
    Status,
    UnsupportedSpec,
    VeryGeneral,
    alpha_value,
    ample_check_elliptic_square,
    koszul_verdict,
    kvery_verdict,
    multiple_for_np,
    np_max,
    np_verdict,
    self_product_np,
    seshadri_elliptic_square,
)


def _explicit(l2: int, eps) -> Explicit:
    return Explicit(l2, QuadraticValue(eps))


def test_alpha_value_examples():
    assert alpha_value(22, 3, 2) == QuadraticValue(4)
    assert alpha_value(16, 4, 2) == QuadraticValue(0)
    assert alpha_value(2, Fraction(4, 3), 2) == QuadraticValue(Fraction(-44, 9))
    with pytest.raises(ValueError):
        alpha_value(10, -1, 2)


def test_np_verdict_examples():
    verdict = np_verdict(PicardOne(8), 0)
    assert verdict.status is Status.HOLDS
    assert {"R2", "R3"} <= set(verdict.rule_ids())

    verdict = np_verdict(VeryGeneral(1, 21), 0)
    assert verdict.status is Status.HOLDS
    assert "R4" in verdict.rule_ids()

    verdict = np_verdict(_explicit(100, 2), 0)
    assert verdict.status is Status.FAILS
    assert verdict.rule_ids() == ("LNP",)
    assert verdict.diagnostics["large_regime_threshold"] == 18

    verdict = np_verdict(PicardOne(1), 0)
    assert verdict.status is Status.UNKNOWN
    assert verdict.rule_ids() == ()
    assert verdict.diagnostics["alpha"] == "-44/9"


def test_np_verdict_rejects_bad_p():
    with pytest.raises(InvalidSpec):
        np_verdict(PicardOne(8), -1)


def test_verdict_shape_invariants():
    specs = [PicardOne(3), PicardOne(8), VeryGeneral(1, 21), _explicit(100, 2)]
    for spec in specs:
        for p in range(0, 4):
            verdict = np_verdict(spec, p)
            if verdict.status is Status.HOLDS:
                assert verdict.fired_rules
            if verdict.status is Status.FAILS:
                assert verdict.rule_ids() == ("LNP",)
                assert "large_regime_threshold" in verdict.diagnostics
            payload = verdict.to_json_dict()
            assert payload["status"] in {"holds", "fails", "unknown"}
            assert isinstance(payload["rules"], list)


def test_np_max_examples():
    result = np_max(_explicit(10000, 100))
    assert result.max_p == 48
    # the scan stops at the first non-Holds verdict
    assert result.trace[-1].status is not Status.HOLDS
    assert [v.status for v in result.trace[:-1]] == [Status.HOLDS] * 49

    assert np_max(PicardOne(8)).max_p == 0
    assert np_max(PicardOne(1)).max_p is None


def test_self_product_examples():
    verdict = self_product_np(3, 2, 1, 0)
    assert verdict.status is Status.HOLDS
    assert verdict.rule_ids() == ("R6",)
    assert verdict.diagnostics["r6_hypothesis_set"] == "1"

    verdict = self_product_np(6, 6, -1, 0)
    assert verdict.status is Status.HOLDS
    assert verdict.diagnostics["r6_hypothesis_set"] == "2"

    verdict = self_product_np(1, 1, 0, 0)
    assert verdict.status is Status.UNKNOWN
    assert verdict.diagnostics["eps"] == "1"

    with pytest.raises(NotAmple):
        self_product_np(1, -1, 0, 0)


def test_self_product_gcd_denominator_guard():
    # hypothesis set (2) with 2*(a1+a2)*g^2 - (a1+a2)^2*(p+2) <= 0 must not
    # fire; (5,4,-1) at p = 0: g = 1, denominator 18 - 162 < 0
    a1, a2, a3, p = 5, 4, -1, 0
    assert ample_check_elliptic_square(a1, a2, a3)
    verdict = self_product_np(a1, a2, a3, p)
    if verdict.status is Status.HOLDS:
        assert verdict.rule_ids() != ("R6",) or verdict.diagnostics.get(
            "r6_hypothesis_set"
        ) != "2"


def test_kvery_examples():
    assert kvery_verdict(_explicit(22, 3), 1).status is Status.HOLDS
    assert kvery_verdict(_explicit(8, 2), 0).status is Status.HOLDS
    verdict = kvery_verdict(_explicit(100, 2), 1)
    assert verdict.status is Status.FAILS
    assert verdict.rule_ids() == ("LVA",)
    assert verdict.diagnostics["large_regime_threshold"] == 18


def test_koszul_examples():
    verdict = koszul_verdict(_explicit(100, 7))
    assert verdict.status is Status.HOLDS
    assert "K1" in verdict.rule_ids()

    verdict = koszul_verdict(_explicit(72, 6))
    assert verdict.status is Status.HOLDS
    assert "K2" in verdict.rule_ids()

    verdict = koszul_verdict(VeryGeneral(1, 46))
    assert verdict.status is Status.HOLDS
    assert "K3" in verdict.rule_ids()

    # no Koszul converse exists: never Fails
    for spec in [PicardOne(1), _explicit(1000, 1), VeryGeneral(1, 2)]:
        assert koszul_verdict(spec).status in {Status.HOLDS, Status.UNKNOWN}


def test_multiple_examples():
    assert multiple_for_np(VeryGeneral(1, 1), 0) == 5
    assert multiple_for_np(VeryGeneral(1, 4), 1) == 4
    assert multiple_for_np(_explicit(2, 1), 0, assert_eps_nonintegral=True) == 3
    with pytest.raises(UnsupportedSpec):
        multiple_for_np(_explicit(2, 1), 0)
    with pytest.raises(UnsupportedSpec):
        multiple_for_np(PicardOne(3), 0)


def test_r5_gating():
    # picard1 d = 10: eps = 40/9 is non-integral, l2 = 20 > 18, so R5 is
    # auto-detected
    assert "R5" in np_verdict(PicardOne(10), 0).rule_ids()
    # explicit specs need the caller's assertion
    spec = _explicit(20, Fraction(4, 3))
    assert "R5" not in np_verdict(spec, 0).rule_ids()
    assert "R5" in np_verdict(spec, 0, assert_eps_nonintegral=True).rule_ids()
    # interval-mode specs never combine with R5, flag or not
    vg = VeryGeneral(1, 10)
    assert "R5" not in np_verdict(vg, 0, assert_eps_nonintegral=True).rule_ids()


def test_interval_mode_uses_both_endpoints():
    # vg(1, 20): alpha at the lower endpoint is negative, so R1 must not
    # fire even though the upper endpoint is fine
    verdict = np_verdict(VeryGeneral(1, 20), 0)
    assert verdict.status is Status.UNKNOWN
    # vg(1, 21) clears both endpoints
    assert "R1" in np_verdict(VeryGeneral(1, 21), 0).rule_ids()


def test_necessity_kernel_random():
    rng = random.Random(11)
    for _ in range(2000):
        l2 = 2 * rng.randint(1, 400)
        p = rng.randint(0, 6)
        eps = QuadraticValue(
            Fraction(rng.randint(1, 40), rng.randint(1, 7)),
            Fraction(rng.randint(0, 5), 3),
            rng.choice([0, 2, 3, 5]),
        )
        if eps.sign() <= 0:
            continue
        if alpha_value(l2, eps, p + 2).sign() > 0:
            assert eps > p + 2


def test_large_regime_coherence_exhaustive():
    # R2 can never contradict a Fails verdict: in the biconditional regime
    # eps >= 2*(p+2) with eps^2 <= l2 forces alpha > 0
    for l2 in range(2, 4001, 2):
        for p in range(0, 13):
            if l2 <= (p + 2) * (p + 3) ** 2:
                continue
            for eps in range(2 * (p + 2), min(60, isqrt(l2)) + 1):
                assert alpha_value(l2, eps, p + 2).sign() > 0


def test_large_regime_matches_root_comparison():
    rng = random.Random(12)
    checked = 0
    with mpmath.workdps(50):
        while checked < 200:
            p = rng.randint(0, 4)
            l2 = 2 * rng.randint((p + 2) * (p + 3) ** 2, 4 * (p + 2) * (p + 3) ** 2)
            if l2 <= (p + 2) * (p + 3) ** 2:
                continue
            eps = Fraction(rng.randint(1, 4 * isqrt(l2)), 4)
            if eps <= 0 or eps * eps > l2:
                continue
            alpha = alpha_value(l2, eps, p + 2)
            if alpha.sign() == 0:
                continue
            verdict = np_verdict(_explicit(l2, eps), p)
            assert verdict.status in {Status.HOLDS, Status.FAILS}
            root = (l2 - mpmath.sqrt(l2 ** 2 - 4 * (p + 2) ** 2 * l2)) / (2 * (p + 2))
            eps_num = mpmath.mpf(eps.numerator) / eps.denominator
            expected = Status.HOLDS if eps_num > root else Status.FAILS
            assert verdict.status is expected, (l2, eps, p)
            checked += 1


def test_theorem_recovers_seshadri_bound():
    # whenever eps > 2*(p+2) with eps exactly known, the verdict is Holds
    rng = random.Random(13)
    for _ in range(300):
        p = rng.randint(0, 4)
        eps = Fraction(rng.randint(8 * (p + 2) + 1, 100 * (p + 2)), 4)
        l2_min = int(eps * eps) + 1
        l2 = 2 * rng.randint(l2_min, 4 * l2_min)
        if eps * eps > l2:
            continue
        verdict = np_verdict(_explicit(l2, eps), p)
        assert verdict.status is Status.HOLDS
        assert {"R1", "R2"} <= set(verdict.rule_ids())


def test_corollary_implies_direct_route_small():
    # R6 firing must always be confirmed by alpha > 0 through the exact eps
    for a1 in range(-10, 11):
        for a2 in range(-10, a1 + 1):
            for a3 in range(-10, a2 + 1):
                if not ample_check_elliptic_square(a1, a2, a3):
                    continue
                l2 = 2 * (a1 * a2 + a2 * a3 + a3 * a1)
                for p in range(0, 3):
                    verdict = self_product_np(a1, a2, a3, p)
                    if verdict.rule_ids() == ("R6",):
                        eps = seshadri_elliptic_square(a1, a2, a3).value
                        assert alpha_value(l2, eps, p + 2).sign() > 0


def test_np_monotone_in_p_on_grid():
    specs = [PicardOne(d) for d in range(1, 31)] + [
        VeryGeneral(1, d2) for d2 in range(1, 31)
    ]
    specs += [_explicit(l2, Fraction(num, 3)) for l2, num in [(100, 12), (50, 21), (16, 12)]]
    for spec in specs:
        holds = [np_verdict(spec, p).status is Status.HOLDS for p in range(0, 8)]
        for earlier, later in zip(holds, holds[1:]):
            if later:
                assert earlier
