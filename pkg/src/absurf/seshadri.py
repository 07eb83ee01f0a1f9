"""Polarized-surface descriptions and their exact Seshadri constants.

Three surface classes have a computable constant: Picard-rank-one type
(1, d) via the Pell equation, the self-product of an elliptic curve via
the Bauer-Schulz finite minimum, and caller-supplied explicit data.  A
very general type (d1, d2) only pins eps into an exact interval.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .errors import InvalidSpec, NotAmple, ParseError
from .exactmath import QuadraticValue, parse_scalar, scalar_text, sqrt_exact
from .pell import pell_fundamental


@dataclass(frozen=True)
class PicardOne:
    """Abelian surface of type (1, d) with Picard number one; L^2 = 2d."""

    d: int

    def __post_init__(self):
        if self.d < 1:
            raise InvalidSpec(f"picard1 needs d >= 1, got {self.d}")


@dataclass(frozen=True)
class VeryGeneral:
    """Very general polarized abelian surface of type (d1, d2); L^2 = 2*d1*d2."""

    d1: int
    d2: int

    def __post_init__(self):
        if not 1 <= self.d1 <= self.d2:
            raise InvalidSpec(f"vg needs 1 <= d1 <= d2, got ({self.d1}, {self.d2})")


@dataclass(frozen=True)
class EllipticSquare:
    """E x E without CM, polarized by b1*F1 + b2*F2 + b3*Diagonal."""

    b1: int
    b2: int
    b3: int

    def __post_init__(self):
        if not ample_check_elliptic_square(self.b1, self.b2, self.b3):
            raise InvalidSpec(
                f"exe coefficients ({self.b1}, {self.b2}, {self.b3}) are not ample"
            )


@dataclass(frozen=True)
class Explicit:
    """Caller-supplied (L^2, eps); taken at face value beyond eps^2 <= L^2."""

    l2: int
    eps: QuadraticValue

    def __post_init__(self):
        if self.l2 <= 0 or self.l2 % 2 != 0:
            raise InvalidSpec(f"L^2 must be a positive even integer, got {self.l2}")
        if not isinstance(self.eps, QuadraticValue):
            object.__setattr__(self, "eps", QuadraticValue(self.eps))
        if self.eps.sign() <= 0:
            raise InvalidSpec(f"eps must be positive, got {self.eps}")
        if self.eps * self.eps > self.l2:
            raise InvalidSpec(f"eps = {self.eps} exceeds sqrt(L^2) = sqrt({self.l2})")


SurfaceSpec = PicardOne | VeryGeneral | EllipticSquare | Explicit


@dataclass(frozen=True)
class SeshadriResult:
    """Exact Seshadri constant, or an exact interval when only bounds exist.

    Exactly one of ``value`` and ``interval`` is set; ``witness`` names the
    case or candidate that produced the number.
    """

    value: QuadraticValue | None
    interval: tuple[QuadraticValue, QuadraticValue] | None
    witness: str

    @property
    def is_exact(self) -> bool:
        return self.value is not None


def self_intersection(spec: SurfaceSpec) -> int:
    """(L^2) of the polarization, always an even integer."""
    if isinstance(spec, PicardOne):
        return 2 * spec.d
    if isinstance(spec, VeryGeneral):
        return 2 * spec.d1 * spec.d2
    if isinstance(spec, EllipticSquare):
        # F1, F2, Diagonal pairwise meet once and have self-intersection 0
        return 2 * (spec.b1 * spec.b2 + spec.b2 * spec.b3 + spec.b3 * spec.b1)
    if isinstance(spec, Explicit):
        return spec.l2
    raise InvalidSpec(f"unknown surface spec {spec!r}")


def seshadri_picard_one(d: int) -> SeshadriResult:
    """eps for type (1, d), Picard rank one.

    sqrt(2d) when 2d is a perfect square, else 2d*y/x from the fundamental
    solution of x^2 - 2d*y^2 = 1.
    """
    if d < 1:
        raise InvalidSpec(f"picard1 needs d >= 1, got {d}")
    n = 2 * d
    root = isqrt(n)
    if root * root == n:
        return SeshadriResult(
            value=QuadraticValue(root),
            interval=None,
            witness=f"2d = {n} is a perfect square: eps = sqrt(2d) = {root}",
        )
    sol = pell_fundamental(n)
    value = QuadraticValue(Fraction(n * sol.y, sol.x))
    return SeshadriResult(
        value=value,
        interval=None,
        witness=(
            f"fundamental solution (x, y) = ({sol.x}, {sol.y}) of "
            f"x^2-{n}*y^2=1: eps = 2d*y/x"
        ),
    )


def ample_check_elliptic_square(b1: int, b2: int, b3: int) -> bool:
    """Ampleness of b1*F1 + b2*F2 + b3*Diagonal on E x E.

    Nakai-Moishezon with the ample test class F1 + F2 + Diagonal:
    L^2 = 2*(b1*b2 + b2*b3 + b3*b1) > 0 and L.H = 2*(b1 + b2 + b3) > 0.
    """
    return b1 * b2 + b2 * b3 + b3 * b1 > 0 and b1 + b2 + b3 > 0


def _pairwise_sum(a1: int, a2: int, a3: int) -> int:
    return a1 * a2 + a2 * a3 + a3 * a1


def seshadri_elliptic_square(b1: int, b2: int, b3: int) -> SeshadriResult:
    """Exact eps on E x E as the Bauer-Schulz finite minimum.

    With (a1, a2, a3) the coefficients sorted descending, the candidates
    are a2+a3, (a1+a2)*(a1*a2+a2*a3+a3*a1)/gcd(a1,a2)^2, and
    a1*d^2 + a2*c^2 + a3*(c+d)^2 over coprime c, d >= 1 with
    2*(c+d)^2 < (a1+a2)^2.
    """
    if not ample_check_elliptic_square(b1, b2, b3):
        raise NotAmple(f"({b1}, {b2}, {b3}) is not ample on E x E")
    a1, a2, a3 = sorted((b1, b2, b3), reverse=True)
    candidates: list[tuple[Fraction, str]] = [
        (Fraction(a2 + a3), f"candidate (i): a2+a3 = {a2 + a3}")
    ]
    g = gcd(a1, a2)
    quotient = Fraction((a1 + a2) * _pairwise_sum(a1, a2, a3), g * g)
    candidates.append(
        (quotient, f"candidate (ii): (a1+a2)(a1*a2+a2*a3+a3*a1)/gcd^2 = {quotient}")
    )
    bound = (a1 + a2) ** 2
    best: tuple[int, int, int] | None = None
    c = 1
    while 2 * (c + 1) ** 2 < bound:
        d = 1
        while 2 * (c + d) ** 2 < bound:
            if gcd(c, d) == 1:
                val = a1 * d * d + a2 * c * c + a3 * (c + d) ** 2
                if best is None or val < best[0]:
                    best = (val, c, d)
            d += 1
        c += 1
    if best is not None:
        val, c, d = best
        candidates.append(
            (Fraction(val), f"candidate (iii) at (c, d) = ({c}, {d}): {val}")
        )
    value, witness = min(candidates, key=lambda item: item[0])
    return SeshadriResult(value=QuadraticValue(value), interval=None, witness=witness)


def seshadri_interval_very_general(d1: int, d2: int) -> SeshadriResult:
    """Exact interval 1/2*sqrt(d1*d2) <= eps <= sqrt(2*d1*d2)."""
    if d1 < 1 or d2 < 1:
        raise InvalidSpec(f"vg needs positive (d1, d2), got ({d1}, {d2})")
    lo = sqrt_exact(Fraction(d1 * d2, 4))
    hi = sqrt_exact(2 * d1 * d2)
    return SeshadriResult(
        value=None,
        interval=(lo, hi),
        witness=f"very general type ({d1}, {d2}): minimal-period lower bound and eps <= sqrt(L^2)",
    )


def seshadri_lower_bound_nonintegral(l2: int) -> QuadraticValue:
    """sqrt(L^2/2), a valid lower bound whenever eps is not an integer."""
    if l2 < 2 or l2 % 2 != 0:
        raise InvalidSpec(f"L^2 must be a positive even integer, got {l2}")
    return sqrt_exact(Fraction(l2, 2))


def seshadri_of(spec: SurfaceSpec) -> SeshadriResult:
    """Exact value or interval for any surface spec."""
    if isinstance(spec, PicardOne):
        return seshadri_picard_one(spec.d)
    if isinstance(spec, EllipticSquare):
        return seshadri_elliptic_square(spec.b1, spec.b2, spec.b3)
    if isinstance(spec, Explicit):
        return SeshadriResult(value=spec.eps, interval=None, witness="caller-supplied eps")
    if isinstance(spec, VeryGeneral):
        return seshadri_interval_very_general(spec.d1, spec.d2)
    raise InvalidSpec(f"unknown surface spec {spec!r}")


# -- spec-string grammar -------------------------------------------------
#
#   picard1:d=<int> | vg:d1=<int>,d2=<int> | exe:b=<int>,<int>,<int>
#   | explicit:l2=<int>,eps=<scalar>


def _parse_int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError as exc:
        raise ParseError(f"expected an integer for {what}, got {text!r}") from exc


def _split_field(part: str, key: str) -> str:
    prefix = key + "="
    if not part.startswith(prefix):
        raise ParseError(f"expected {key}=<value>, got {part!r}")
    return part[len(prefix):]


def parse_surface_spec(text: str) -> SurfaceSpec:
    """Parse a spec string like ``picard1:d=8`` or ``explicit:l2=22,eps=3``."""
    s = text.strip().replace(" ", "")
    head, sep, body = s.partition(":")
    if not sep or not body:
        raise ParseError(f"malformed surface spec {text!r}")
    if head == "picard1":
        return PicardOne(_parse_int(_split_field(body, "d"), "d"))
    if head == "vg":
        parts = body.split(",")
        if len(parts) != 2:
            raise ParseError(f"vg spec needs d1=<int>,d2=<int>, got {text!r}")
        return VeryGeneral(
            _parse_int(_split_field(parts[0], "d1"), "d1"),
            _parse_int(_split_field(parts[1], "d2"), "d2"),
        )
    if head == "exe":
        values = _split_field(body, "b").split(",")
        if len(values) != 3:
            raise ParseError(f"exe spec needs b=<int>,<int>,<int>, got {text!r}")
        b1, b2, b3 = (_parse_int(v, "b") for v in values)
        return EllipticSquare(b1, b2, b3)
    if head == "explicit":
        parts = body.split(",")
        if len(parts) != 2:
            raise ParseError(f"explicit spec needs l2=<int>,eps=<scalar>, got {text!r}")
        l2 = _parse_int(_split_field(parts[0], "l2"), "l2")
        eps = parse_scalar(_split_field(parts[1], "eps"))
        return Explicit(l2, eps)
    raise ParseError(f"unknown surface class {head!r} in {text!r}")


def spec_string(spec: SurfaceSpec) -> str:
    """Canonical spec-string rendering; inverse of parse_surface_spec."""
    if isinstance(spec, PicardOne):
        return f"picard1:d={spec.d}"
    if isinstance(spec, VeryGeneral):
        return f"vg:d1={spec.d1},d2={spec.d2}"
    if isinstance(spec, EllipticSquare):
        return f"exe:b={spec.b1},{spec.b2},{spec.b3}"
    if isinstance(spec, Explicit):
        return f"explicit:l2={spec.l2},eps={scalar_text(spec.eps)}"
    raise InvalidSpec(f"unknown surface spec {spec!r}")
