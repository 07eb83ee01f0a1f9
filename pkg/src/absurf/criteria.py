"""Exact decision rules for syzygies, higher-order embeddings and Koszulness.

Every verdict is three-valued.  Holds needs a sufficient rule to fire;
Fails is only emitted inside the large-degree regimes where the criterion
becomes an equivalence; everything else is an honest Unknown.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import InvalidSpec, NotAmple, UnsupportedSpec
from .exactmath import QuadraticValue, ceil_div_sqrt, quad_compare, scalar_text
from .seshadri import (
    EllipticSquare,
    Explicit,
    PicardOne,
    SurfaceSpec,
    VeryGeneral,
    ample_check_elliptic_square,
    seshadri_elliptic_square,
    seshadri_of,
    self_intersection,
)


class Status(enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    UNKNOWN = "unknown"


RULE_CITATIONS = {
    "R1": "L2*(eps-(p+2)) - (p+2)*eps^2 > 0",
    "R2": "eps >= 2*(p+2)",
    "R3": "Picard-rank-one type (1,d) with d >= 2*(p+2)^2",
    "R4": "very general with L2 > (81/8)*(p+2)^2",
    "R5": "eps not an integer and L2 > (9/2)*(p+2)^2",
    "R6": "elliptic-square coefficient inequalities on sorted (a1,a2,a3)",
    "LNP": "large regime L2 > (p+2)*(p+3)^2: N_p holds iff alpha(eps) > 0",
    "V1": "L2*(eps-(k+1)) - (k+1)*eps^2 > 0",
    "LVA": "large regime L2 > (k+1)*(k+2)^2: k-very-ample iff alpha(eps) > 0",
    "K1": "L2*(eps-3) - 3*eps^2 > 0",
    "K2": "eps >= 6",
    "K3": "very general with L2 > 729/8",
}


@dataclass(frozen=True)
class Rule:
    id: str
    cite: str


def _rule(rule_id: str) -> Rule:
    return Rule(rule_id, RULE_CITATIONS[rule_id])


@dataclass(frozen=True)
class Verdict:
    prop: str
    status: Status
    fired_rules: tuple[Rule, ...]
    diagnostics: dict

    def rule_ids(self) -> tuple[str, ...]:
        return tuple(rule.id for rule in self.fired_rules)

    def to_json_dict(self) -> dict:
        return {
            "property": self.prop,
            "status": self.status.value,
            "rules": [{"id": r.id, "cite": r.cite} for r in self.fired_rules],
            "diagnostics": dict(self.diagnostics),
        }


@dataclass(frozen=True)
class NpMaxResult:
    max_p: int | None
    trace: tuple[Verdict, ...]


def alpha_value(l2: int, eps, shift: int) -> QuadraticValue:
    """The concave criterion polynomial L2*(eps - shift) - shift*eps^2.

    shift is p+2 for syzygies, k+1 for k-very-ampleness and 3 for the
    Koszul property.
    """
    eps = QuadraticValue._coerce(eps)
    if eps is NotImplemented:
        raise TypeError("eps must be an exact scalar")
    if eps.sign() <= 0:
        raise ValueError(f"eps must be positive, got {eps}")
    return l2 * (eps - shift) - shift * eps * eps


class _EpsData:
    """Exact eps (or interval) of a spec plus the alpha evaluations."""

    def __init__(self, spec: SurfaceSpec, shift: int):
        self.l2 = self_intersection(spec)
        resolved = seshadri_of(spec)
        self.witness = resolved.witness
        self.exact = resolved.value
        self.interval = resolved.interval
        if self.exact is not None:
            self.alpha = alpha_value(self.l2, self.exact, shift)
            # concave polynomial: positivity at both interval ends implies
            # positivity on the whole interval
            self.alpha_positive = self.alpha.sign() > 0
            self.lower = self.exact
        else:
            lo, hi = self.interval
            self.alpha_lo = alpha_value(self.l2, lo, shift)
            self.alpha_hi = alpha_value(self.l2, hi, shift)
            self.alpha_positive = (
                self.alpha_lo.sign() > 0 and self.alpha_hi.sign() > 0
            )
            self.lower = lo

    def describe(self, diagnostics: dict) -> None:
        diagnostics["l2"] = self.l2
        if self.exact is not None:
            diagnostics["eps"] = scalar_text(self.exact)
            diagnostics["alpha"] = scalar_text(self.alpha)
        else:
            lo, hi = self.interval
            diagnostics["eps_lo"] = scalar_text(lo)
            diagnostics["eps_hi"] = scalar_text(hi)
            diagnostics["alpha_lo"] = scalar_text(self.alpha_lo)
            diagnostics["alpha_hi"] = scalar_text(self.alpha_hi)
        diagnostics["eps_witness"] = self.witness


def _validate_index(value: int, name: str) -> None:
    if value < 0:
        raise InvalidSpec(f"{name} must be a nonnegative integer, got {value}")


def _self_product_hypothesis(a1: int, a2: int, a3: int, p: int) -> str | None:
    """Which self-product hypothesis set fires for sorted a1 >= a2 >= a3."""
    s = p + 2
    pair_sum = a2 + a3
    if pair_sum <= s:
        return None
    pairwise = a1 * a2 + a2 * a3 + a3 * a1
    base_bound = Fraction(s * pair_sum * pair_sum, 2 * (pair_sum - s))
    if a3 >= 0:
        return "1" if pairwise > base_bound else None
    # set (2) needs -sqrt(6)*(p+2) <= a3 < 0, decided by squaring
    if a3 * a3 > 6 * s * s:
        return None
    if a1 + 3 * a3 < 0:
        return None
    g = gcd(a1, a2)
    denominator = 2 * (a1 + a2) * g * g - (a1 + a2) ** 2 * s
    if denominator <= 0:
        # gcd-term constraint degenerates; treated as unsatisfiable
        return None
    gcd_bound = Fraction(2 * s * g ** 4, denominator)
    if pairwise > max(base_bound, gcd_bound):
        return "2"
    return None


def np_verdict(
    spec: SurfaceSpec, p: int, assert_eps_nonintegral: bool = False
) -> Verdict:
    """Decide property N_p for the given surface.

    Sufficient rules R1-R6 yield Holds; in the regime L2 > (p+2)*(p+3)^2
    with eps exactly known the criterion is an equivalence, so a
    nonpositive alpha yields Fails; otherwise Unknown.
    """
    _validate_index(p, "p")
    shift = p + 2
    data = _EpsData(spec, shift)
    diagnostics: dict = {"p": p}
    data.describe(diagnostics)
    fired: list[Rule] = []

    if data.alpha_positive:
        fired.append(_rule("R1"))
    if quad_compare(data.lower, 2 * shift) >= 0:
        fired.append(_rule("R2"))
        diagnostics["r2_threshold"] = 2 * shift
    if isinstance(spec, PicardOne) and spec.d >= 2 * shift * shift:
        fired.append(_rule("R3"))
        diagnostics["r3_threshold"] = 2 * shift * shift
    if isinstance(spec, VeryGeneral) and data.l2 > Fraction(81, 8) * shift * shift:
        fired.append(_rule("R4"))
        diagnostics["r4_threshold"] = scalar_text(Fraction(81, 8) * shift * shift)
    if isinstance(spec, Explicit):
        nonintegral = assert_eps_nonintegral
    elif isinstance(spec, (PicardOne, EllipticSquare)):
        # exactly computed eps: non-integrality is auto-detected
        nonintegral = not data.exact.is_integer()
    else:
        # interval-mode specs never combine with the non-integrality rule
        nonintegral = False
    if nonintegral and data.l2 > Fraction(9, 2) * shift * shift:
        fired.append(_rule("R5"))
        diagnostics["r5_threshold"] = scalar_text(Fraction(9, 2) * shift * shift)
    if isinstance(spec, EllipticSquare):
        a1, a2, a3 = sorted((spec.b1, spec.b2, spec.b3), reverse=True)
        hypothesis = _self_product_hypothesis(a1, a2, a3, p)
        if hypothesis is not None:
            fired.append(_rule("R6"))
            diagnostics["r6_hypothesis_set"] = hypothesis

    prop = f"N_{p}"
    if fired:
        return Verdict(prop, Status.HOLDS, tuple(fired), diagnostics)
    if data.exact is not None and data.l2 > shift * (p + 3) ** 2:
        diagnostics["large_regime_threshold"] = shift * (p + 3) ** 2
        if data.alpha.sign() <= 0:
            return Verdict(prop, Status.FAILS, (_rule("LNP"),), diagnostics)
    return Verdict(prop, Status.UNKNOWN, (), diagnostics)


def np_max(spec: SurfaceSpec, assert_eps_nonintegral: bool = False) -> NpMaxResult:
    """Largest p with np_verdict Holds, scanning upward from p = 0.

    Every Holds rule caps p by roughly sqrt(L2), so the scan terminates
    at the first non-Holds verdict.
    """
    trace: list[Verdict] = []
    p = 0
    while True:
        verdict = np_verdict(spec, p, assert_eps_nonintegral)
        trace.append(verdict)
        if verdict.status is not Status.HOLDS:
            break
        p += 1
    return NpMaxResult(p - 1 if p > 0 else None, tuple(trace))


def self_product_np(b1: int, b2: int, b3: int, p: int) -> Verdict:
    """N_p on E x E from the coefficient inequalities, with exact fallback.

    When neither hypothesis set fires, the exact Bauer-Schulz eps is
    computed and rules R1/R2 are tried directly.
    """
    _validate_index(p, "p")
    if not ample_check_elliptic_square(b1, b2, b3):
        raise NotAmple(f"({b1}, {b2}, {b3}) is not ample on E x E")
    a1, a2, a3 = sorted((b1, b2, b3), reverse=True)
    shift = p + 2
    l2 = 2 * (a1 * a2 + a2 * a3 + a3 * a1)
    diagnostics: dict = {"p": p, "l2": l2, "sorted_coefficients": f"{a1},{a2},{a3}"}
    prop = f"N_{p}"

    hypothesis = _self_product_hypothesis(a1, a2, a3, p)
    if hypothesis is not None:
        diagnostics["r6_hypothesis_set"] = hypothesis
        return Verdict(prop, Status.HOLDS, (_rule("R6"),), diagnostics)

    resolved = seshadri_elliptic_square(b1, b2, b3)
    eps = resolved.value
    alpha = alpha_value(l2, eps, shift)
    diagnostics["eps"] = scalar_text(eps)
    diagnostics["alpha"] = scalar_text(alpha)
    diagnostics["eps_witness"] = resolved.witness
    fired = []
    if alpha.sign() > 0:
        fired.append(_rule("R1"))
    if quad_compare(eps, 2 * shift) >= 0:
        fired.append(_rule("R2"))
    if fired:
        return Verdict(prop, Status.HOLDS, tuple(fired), diagnostics)
    return Verdict(prop, Status.UNKNOWN, (), diagnostics)


def kvery_verdict(spec: SurfaceSpec, k: int) -> Verdict:
    """Decide k-very-ampleness: shift k+1, equivalence above (k+1)*(k+2)^2."""
    _validate_index(k, "k")
    shift = k + 1
    data = _EpsData(spec, shift)
    diagnostics: dict = {"k": k}
    data.describe(diagnostics)
    prop = f"{k}-very-ample"
    if data.alpha_positive:
        return Verdict(prop, Status.HOLDS, (_rule("V1"),), diagnostics)
    if data.exact is not None and data.l2 > (k + 1) * (k + 2) ** 2:
        diagnostics["large_regime_threshold"] = (k + 1) * (k + 2) ** 2
        if data.alpha.sign() <= 0:
            return Verdict(prop, Status.FAILS, (_rule("LVA"),), diagnostics)
    return Verdict(prop, Status.UNKNOWN, (), diagnostics)


def koszul_verdict(spec: SurfaceSpec) -> Verdict:
    """Decide Koszulness of the section ring; sufficient rules only."""
    data = _EpsData(spec, 3)
    diagnostics: dict = {}
    data.describe(diagnostics)
    fired: list[Rule] = []
    if data.alpha_positive:
        fired.append(_rule("K1"))
    if quad_compare(data.lower, 6) >= 0:
        fired.append(_rule("K2"))
    if isinstance(spec, VeryGeneral) and data.l2 > Fraction(729, 8):
        fired.append(_rule("K3"))
        diagnostics["k3_threshold"] = "729/8"
    if fired:
        return Verdict("koszul", Status.HOLDS, tuple(fired), diagnostics)
    return Verdict("koszul", Status.UNKNOWN, (), diagnostics)


def multiple_for_np(
    spec: SurfaceSpec, p: int, assert_eps_nonintegral: bool = False
) -> int:
    """Smallest certified m so that the m-th multiple satisfies N_p.

    Very general surfaces use ceil(9*(p+2) / (2*sqrt(2*L2))); surfaces
    with a caller-asserted non-integral eps use ceil(3*(p+2)/sqrt(2*L2)).
    """
    _validate_index(p, "p")
    if isinstance(spec, VeryGeneral):
        return ceil_div_sqrt(9 * (p + 2), 2, 2 * self_intersection(spec))
    if isinstance(spec, Explicit) and assert_eps_nonintegral:
        return ceil_div_sqrt(3 * (p + 2), 1, 2 * spec.l2)
    raise UnsupportedSpec(
        "multiple_for_np needs a vg spec, or an explicit spec with eps asserted non-integral"
    )
