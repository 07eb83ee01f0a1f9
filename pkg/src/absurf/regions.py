"""Exact convex regions bounding infinitesimal Newton-Okounkov bodies.

All regions live in the first quadrant of the (t, y) plane and are built
from a single parameter eps (and optionally alpha), so their coordinates
stay inside one real quadratic field.  Areas, vertical slices and
containment are decided exactly.
"""

from __future__ import annotations

from .errors import (
    EpsOutOfRange,
    IncompatibleRadicands,
    MultiplicityTooSmall,
    NonPositiveLength,
    ParameterOrderViolation,
)
from .exactmath import Fraction, QuadraticValue, quad_compare

Point = tuple[QuadraticValue, QuadraticValue]


def _coerce_scalar(x) -> QuadraticValue:
    v = QuadraticValue._coerce(x)
    if v is NotImplemented:
        raise TypeError(f"expected an exact scalar, got {x!r}")
    return v


def _cross(origin: Point, first: Point, second: Point) -> QuadraticValue:
    return (first[0] - origin[0]) * (second[1] - origin[1]) - (
        first[1] - origin[1]
    ) * (second[0] - origin[0])


def _lex_less(p: Point, q: Point) -> bool:
    by_t = quad_compare(p[0], q[0])
    if by_t != 0:
        return by_t < 0
    return quad_compare(p[1], q[1]) < 0


class Polygon:
    """Strictly convex polygon with exact coordinates in one quadratic field.

    Vertices are normalized to counterclockwise order starting from the
    lexicographically smallest point; repeated or collinear vertices are
    rejected at construction.
    """

    __slots__ = ("vertices",)

    def __init__(self, vertices):
        points = [(_coerce_scalar(t), _coerce_scalar(y)) for t, y in vertices]
        if len(points) < 3:
            raise ValueError(f"polygon needs at least 3 vertices, got {len(points)}")
        radicands = {c.d for p in points for c in p if c.d != 0}
        if len(radicands) > 1:
            raise IncompatibleRadicands(
                f"polygon coordinates mix radicands {sorted(radicands)}"
            )
        doubled = QuadraticValue(0)
        for (x1, y1), (x2, y2) in zip(points, points[1:] + points[:1]):
            doubled = doubled + x1 * y2 - x2 * y1
        orientation = doubled.sign()
        if orientation == 0:
            raise ValueError("degenerate polygon with zero area")
        if orientation < 0:
            points.reverse()
        n = len(points)
        for i in range(n):
            turn = _cross(points[i], points[(i + 1) % n], points[(i + 2) % n])
            if turn.sign() <= 0:
                raise ValueError("polygon must be strictly convex")
        start = 0
        for i in range(1, n):
            if _lex_less(points[i], points[start]):
                start = i
        object.__setattr__(self, "vertices", tuple(points[start:] + points[:start]))

    def __setattr__(self, name, value):
        raise AttributeError("Polygon is immutable")

    def edges(self) -> list[tuple[Point, Point]]:
        cyc = list(self.vertices) + [self.vertices[0]]
        return list(zip(cyc, cyc[1:]))

    def __eq__(self, other):
        if not isinstance(other, Polygon):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        inner = ", ".join(f"({t}, {y})" for t, y in self.vertices)
        return f"Polygon[{inner}]"


def inverted_simplex(xi) -> Polygon:
    """Triangle 0 <= t <= xi, 0 <= y <= t."""
    xi = _coerce_scalar(xi)
    if xi.sign() <= 0:
        raise NonPositiveLength(f"simplex length must be positive, got {xi}")
    zero = QuadraticValue(0)
    return Polygon([(zero, zero), (xi, zero), (xi, xi)])


def bounding_triangle(pnum: int, q: int) -> Polygon:
    """Triangle O, A = (p/q, p/q), B = (p/(q-1), 0) bounding the generic body.

    p is the degree of the Seshadri exceptional curve and q >= 2 its
    multiplicity; q = 1 would give an unbounded strip, not a polygon.
    """
    if pnum < 1:
        raise ValueError(f"curve degree must be positive, got {pnum}")
    if q < 2:
        raise MultiplicityTooSmall(f"multiplicity must be >= 2, got {q}")
    zero = QuadraticValue(0)
    apex = QuadraticValue(Fraction(pnum, q))
    return Polygon(
        [(zero, zero), (QuadraticValue(Fraction(pnum, q - 1)), zero), (apex, apex)]
    )


def region_delta(eps) -> Polygon:
    """Triangle (0,0), (eps, eps), (eps/(eps-1), 0) for 1 < eps < 2.

    The slanted edge interpolates (eps, eps) down to the t-axis through
    the pivot (2, 1).
    """
    eps = _coerce_scalar(eps)
    if not (1 < eps and eps < 2):
        raise EpsOutOfRange(f"need 1 < eps < 2, got {eps}")
    zero = QuadraticValue(0)
    return Polygon([(zero, zero), (eps / (eps - 1), zero), (eps, eps)])


def region_delta_alpha(eps, alpha) -> Polygon:
    """Quadrilateral (0,0), (eps,eps), (alpha,eps), ((2*eps-alpha)/(eps-1), 0).

    Requires 1 < eps < alpha < 2; the slanted edge again passes through
    (2, 1).
    """
    eps = _coerce_scalar(eps)
    alpha = _coerce_scalar(alpha)
    if not (1 < eps and eps < alpha and alpha < 2):
        raise ParameterOrderViolation(
            f"need 1 < eps < alpha < 2, got eps = {eps}, alpha = {alpha}"
        )
    zero = QuadraticValue(0)
    foot = (2 * eps - alpha) / (eps - 1)
    return Polygon([(zero, zero), (foot, zero), (alpha, eps), (eps, eps)])


def polygon_area(poly: Polygon) -> QuadraticValue:
    """Exact shoelace area."""
    doubled = QuadraticValue(0)
    for (x1, y1), (x2, y2) in poly.edges():
        doubled = doubled + x1 * y2 - x2 * y1
    return doubled / 2


def slice_length(poly: Polygon, t0) -> QuadraticValue:
    """Length of the vertical section {y : (t0, y) in poly}; 0 off the body."""
    t0 = _coerce_scalar(t0)
    hits: list[QuadraticValue] = []
    for (x1, y1), (x2, y2) in poly.edges():
        side1 = quad_compare(x1, t0)
        side2 = quad_compare(x2, t0)
        if side1 == 0:
            hits.append(y1)
        if side2 == 0:
            hits.append(y2)
        if side1 * side2 < 0:
            hits.append(y1 + (t0 - x1) * (y2 - y1) / (x2 - x1))
    if len(hits) < 2:
        return QuadraticValue(0)
    return max(hits) - min(hits)


def contains(outer: Polygon, inner: Polygon) -> bool:
    """Whether every vertex of inner lies in every edge half-plane of outer.

    Sufficient and necessary for convex polygons; all sign tests exact.
    """
    for tail, head in outer.edges():
        for vertex in inner.vertices:
            if _cross(tail, head, vertex).sign() < 0:
                return False
    return True
