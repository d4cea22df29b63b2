"""Polyline Jordan arcs: reflection, hull membership, and the arc-vs-geodesic bound.

Setting: a simple polyline ``J`` inside the unit disk whose endpoints lie on
the vertical diameter, a map ``f`` univalent on the disk with one pole ``s``,
and the geodesic ``gamma`` joining the endpoints (after normalization, the
straight vertical segment). The verified inequality is

    len(f(gamma)) <= constant * len(f(J))

where the constant depends on where ``s`` sits relative to ``J`` and its
mirror image ``J^`` across the imaginary axis:

* ``s`` outside the filled region of ``J + J^``: the analytic-case constant
  applies (default 17.45, the best known value; the self-computed
  ``limit_bound`` minimum ~73.25 is a safe fallback).
* ``s`` inside: the constant is the minimized measure bound at
  ``tau = tanh(dist(s, gamma~))``, where ``gamma~`` is the axis segment
  enclosed by ``J`` (the part of the imaginary axis not reachable from
  outside the disk without crossing ``J``).

Arcs are restricted to polylines so that axis intersections, reflection and
hull membership are exact. Hull tests use the winding number of the relevant
closed polyline; the standing hypothesis ``s`` outside ``hull(gamma~ + J)``
additionally requires ``s`` to stay off both curves. When ``gamma~``
overhangs the endpoints of ``J``, the closed curve is taken as ``J`` plus the
chord joining its endpoints, the overhang counting as a degenerate slit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bounds import minimize_over_q
from .conformal import MoebiusMap, as_complex
from .errors import (
    DegenerateGeometryError,
    DomainError,
    HypothesisViolationError,
)
from .hyperbolic import hyp_dist_to_vertical_segment
from .lengths import (
    DEFAULT_LENGTH_TOL,
    TestFunction,
    image_curve_length,
    polyline_image_length,
    segment_curve,
)

#: Default numeric stand-in for the analytic-case constant.
DEFAULT_ANALYTIC_CONSTANT = 17.45

#: Tangency / on-curve tolerance for the exact polyline predicates.
GEOMETRY_TOL = 1e-12

_ON_CURVE_TOL = 1e-10


def _orient(a: complex, b: complex, c: complex) -> float:
    return (b.real - a.real) * (c.imag - a.imag) - (b.imag - a.imag) * (c.real - a.real)


def _segments_cross(a: complex, b: complex, c: complex, d: complex) -> bool:
    d1 = _orient(c, d, a)
    d2 = _orient(c, d, b)
    d3 = _orient(a, b, c)
    d4 = _orient(a, b, d)
    if ((d1 > 0) != (d2 > 0)) and ((d3 > 0) != (d4 > 0)):
        return True

    def on(a, b, c):
        return (
            _orient(a, b, c) == 0.0
            and min(a.real, b.real) <= c.real <= max(a.real, b.real)
            and min(a.imag, b.imag) <= c.imag <= max(a.imag, b.imag)
        )

    return on(c, d, a) or on(c, d, b) or on(a, b, c) or on(a, b, d)


@dataclass(frozen=True)
class PolylineArc:
    """A simple polyline inside the open unit disk."""

    vertices: tuple[complex, ...]

    def __post_init__(self) -> None:
        verts = tuple(complex(v) for v in self.vertices)
        object.__setattr__(self, "vertices", verts)
        if len(verts) < 2:
            raise DomainError("a polyline arc needs at least two vertices")
        for v in verts:
            if abs(v) >= 1.0:
                raise DomainError(f"vertex {v} is not strictly inside the unit disk")
        for u, v in zip(verts, verts[1:]):
            if u == v:
                raise DomainError("consecutive vertices must be distinct")
        n = len(verts) - 1
        for i in range(n):
            for j in range(i + 2, n):
                if i == 0 and j == n - 1 and verts[0] == verts[n]:
                    continue
                if _segments_cross(verts[i], verts[i + 1], verts[j], verts[j + 1]):
                    raise DomainError("polyline is not simple: segments cross")

    @property
    def endpoints(self) -> tuple[complex, complex]:
        return self.vertices[0], self.vertices[-1]

    def reflected(self) -> "PolylineArc":
        """Mirror image across the imaginary axis, ``z -> -conj(z)``."""
        return PolylineArc(tuple(-v.conjugate() for v in self.vertices))

    def distance_to(self, w: complex) -> float:
        best = math.inf
        for u, v in zip(self.vertices, self.vertices[1:]):
            d = v - u
            denom = abs(d) ** 2
            t = max(0.0, min(1.0, ((w - u) * d.conjugate()).real / denom))
            best = min(best, abs(w - (u + t * d)))
        return best

    def length(self) -> float:
        return sum(abs(v - u) for u, v in zip(self.vertices, self.vertices[1:]))


def _is_on_axis(arc: PolylineArc, tol: float = GEOMETRY_TOL) -> bool:
    return all(abs(v.real) <= tol for v in arc.vertices)


def _vertical_segment_distance(w: complex, y_lo: float, y_hi: float) -> float:
    dy = 0.0 if y_lo <= w.imag <= y_hi else min(abs(w.imag - y_lo), abs(w.imag - y_hi))
    return math.hypot(w.real, dy)


def enclosed_axis_segment(arc: PolylineArc, tol: float = GEOMETRY_TOL) -> tuple[float, float]:
    """The axis segment enclosed by an arc whose endpoints lie on the axis.

    Returns ``(y_lo, y_hi)`` for the vertical segment ``[i y_lo, i y_hi]``:
    the span of all points where the arc meets the imaginary axis. Everything
    of the axis outside that span is reachable from outside the disk, so the
    span is exactly the non-reachable part. Tangential contact (an interior
    touch without a sign change, or an interior sub-segment running along the
    axis) is rejected as degenerate; an arc lying entirely on the axis is the
    trivial case and is allowed.
    """
    verts = arc.vertices
    z1, z2 = arc.endpoints
    if abs(z1.real) > tol or abs(z2.real) > tol:
        raise DomainError("arc endpoints must lie on the imaginary axis (normalize first)")
    if _is_on_axis(arc, tol):
        ys = [v.imag for v in verts]
        return min(ys), max(ys)

    xs = [v.real for v in verts]
    on = [abs(x) <= tol for x in xs]
    n = len(verts)
    for i in range(n - 1):
        if on[i] and on[i + 1]:
            raise DegenerateGeometryError("arc runs along the imaginary axis")

    ys: list[float] = []
    for i, v in enumerate(verts):
        if not on[i]:
            continue
        if 0 < i < n - 1:
            if xs[i - 1] * xs[i + 1] > 0.0:
                raise DegenerateGeometryError(
                    f"arc touches the imaginary axis tangentially at vertex {v}"
                )
        ys.append(v.imag)
    for i in range(n - 1):
        if on[i] or on[i + 1]:
            continue
        if xs[i] * xs[i + 1] < 0.0:
            t = xs[i] / (xs[i] - xs[i + 1])
            ys.append(verts[i].imag + t * (verts[i + 1].imag - verts[i].imag))
    return min(ys), max(ys)


def winding_number(point: complex, loop: tuple[complex, ...]) -> int:
    """Winding number of a closed polyline about ``point``.

    The loop closes implicitly from the last vertex back to the first. The
    point must not lie on the loop.
    """
    w = 0
    n = len(loop)
    for k in range(n):
        a, b = loop[k], loop[(k + 1) % n]
        if a == b:
            continue
        if a.imag <= point.imag:
            if b.imag > point.imag and _orient(a, b, point) > 0.0:
                w += 1
        elif b.imag <= point.imag and _orient(a, b, point) < 0.0:
            w -= 1
    return w


def _mirror_loop(arc: PolylineArc) -> tuple[complex, ...]:
    """Closed loop traversing the arc and then its mirror image back."""
    back = [-v.conjugate() for v in reversed(arc.vertices)]
    return arc.vertices + tuple(back[1:-1])


@dataclass(frozen=True)
class ArcConstant:
    """Branch decision and the applicable constant for an arc instance."""

    branch: str
    constant: float
    tau: float


def arc_constant(
    s: complex, arc: PolylineArc, analytic_constant: float = DEFAULT_ANALYTIC_CONSTANT
) -> ArcConstant:
    """Select the constant bounding ``len(f(gamma)) / len(f(J))`` for a pole at ``s``.

    Requires the standing hypothesis that ``s`` lies outside the filled
    region bounded by the enclosed axis segment and the arc (including both
    curves); raises :class:`HypothesisViolationError` otherwise. The branch
    is decided by the winding number of the arc-plus-mirror loop about ``s``.
    """
    ss = as_complex(s)
    if abs(ss) >= 1.0:
        raise DomainError("the pole must lie strictly inside the unit disk")
    for v in arc.vertices:
        if ss == v:
            raise DomainError("the pole must not coincide with an arc vertex")

    y_lo, y_hi = enclosed_axis_segment(arc)

    if arc.distance_to(ss) <= _ON_CURVE_TOL:
        raise HypothesisViolationError("pole lies on the arc")
    if _vertical_segment_distance(ss, y_lo, y_hi) <= _ON_CURVE_TOL:
        raise HypothesisViolationError("pole lies on the enclosed axis segment")
    if not _is_on_axis(arc):
        # Implicit closure of the loop is the axis chord joining the endpoints;
        # the overhang of the axis segment beyond them is a degenerate slit and
        # was covered by the distance check above.
        if winding_number(ss, arc.vertices) != 0:
            raise HypothesisViolationError(
                "pole lies inside the region bounded by the arc and the axis"
            )

    tau = math.tanh(hyp_dist_to_vertical_segment(ss, y_lo, y_hi))
    if _is_on_axis(arc):
        inside = False
    else:
        inside = winding_number(ss, _mirror_loop(arc)) != 0
    if inside:
        if not 0.0 < tau < 1.0:
            raise DegenerateGeometryError(f"tau = {tau!r} outside (0, 1)")
        return ArcConstant(
            branch="inside_hull", constant=minimize_over_q(tau, "measure").value, tau=tau
        )
    return ArcConstant(branch="outside_hull", constant=float(analytic_constant), tau=tau)


@dataclass(frozen=True)
class ArcReport:
    """Outcome of one arc-vs-geodesic length check."""

    function_id: str
    branch: str
    constant: float
    tau: float
    length_geodesic: float
    length_arc: float
    ratio: float
    passed: bool
    error_geodesic: float
    error_arc: float


def verify_arc_inequality(
    f: TestFunction,
    arc: PolylineArc,
    tol: float = DEFAULT_LENGTH_TOL,
    analytic_constant: float = DEFAULT_ANALYTIC_CONSTANT,
) -> ArcReport:
    """Check ``len(f(gamma)) <= constant * len(f(J))`` for the pole of ``f``.

    ``gamma`` is the vertical segment joining the arc endpoints (their
    hyperbolic geodesic once both lie on the vertical diameter).
    """
    sel = arc_constant(complex(f.pole), arc, analytic_constant)
    z1, z2 = arc.endpoints
    geod = segment_curve(complex(0.0, z1.imag), complex(0.0, z2.imag), label="geodesic")
    lg, eg = image_curve_length(f, geod, tol)
    la, ea = polyline_image_length(f, arc.vertices, tol)
    ratio = lg / la
    return ArcReport(
        function_id=f.id,
        branch=sel.branch,
        constant=sel.constant,
        tau=sel.tau,
        length_geodesic=lg,
        length_arc=la,
        ratio=ratio,
        passed=ratio <= sel.constant,
        error_geodesic=eg,
        error_arc=ea,
    )


@dataclass(frozen=True)
class NormalizedInstance:
    """A pole/endpoints/arc configuration moved so the endpoints sit on the axis."""

    s: complex
    z1: complex
    z2: complex
    arc: PolylineArc | None
    transform: MoebiusMap


def normalize_to_axis(
    s: complex, z1: complex, z2: complex, arc: PolylineArc | None = None
) -> NormalizedInstance:
    """Compose disk automorphisms sending ``z1``, ``z2`` onto the vertical diameter.

    The hyperbolic midpoint of the endpoints goes to the origin and the pair
    is rotated onto the imaginary axis, ``z2`` to the upper point. Hyperbolic
    distances are unchanged (automorphisms are isometries). Polyline vertices
    are mapped individually and rejoined by straight segments; endpoints that
    already lie on the axis are returned through the identity.
    """
    z1, z2 = complex(z1), complex(z2)
    if z1 == z2:
        raise DomainError("endpoints must be distinct")
    for z in (z1, z2):
        if abs(z) >= 1.0:
            raise DomainError("endpoints must lie strictly inside the unit disk")

    if z1.real == 0.0 and z2.real == 0.0:
        transform = MoebiusMap.identity()
    else:
        # Send z1 to 0, find the hyperbolic midpoint of the image pair, recenter.
        to_zero = MoebiusMap(1, -z1, -z1.conjugate(), 1)
        w = to_zero(z2).value
        r = abs(w)
        mid = (w / r) * (r / (1.0 + math.sqrt(1.0 - r * r)))
        recenter = MoebiusMap(1, -mid, -mid.conjugate(), 1)
        u2 = recenter(w).value
        angle = math.pi / 2.0 - math.atan2(u2.imag, u2.real)
        rot = MoebiusMap(complex(math.cos(angle), math.sin(angle)), 0, 0, 1)
        transform = rot.compose(recenter.compose(to_zero))

    new_arc = None
    if arc is not None:
        new_arc = PolylineArc(tuple(transform(v).value for v in arc.vertices))
    return NormalizedInstance(
        s=transform(s).value,
        z1=transform(z1).value,
        z2=transform(z2).value,
        arc=new_arc,
        transform=transform,
    )


def load_polyline_instance(path) -> tuple[complex, PolylineArc]:
    """Read a pole and polyline from the plain-text exchange format.

    First non-comment line: ``pole <re> <im>``; every following line one
    vertex as ``<re> <im>``. Blank lines and ``#`` comments are skipped.
    """
    pole: complex | None = None
    vertices: list[complex] = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if pole is None:
                if len(parts) != 3 or parts[0] != "pole":
                    raise DomainError(
                        f"{path}:{lineno}: expected header 'pole <re> <im>', got {line!r}"
                    )
                pole = complex(float(parts[1]), float(parts[2]))
            else:
                if len(parts) != 2:
                    raise DomainError(
                        f"{path}:{lineno}: expected a vertex '<re> <im>', got {line!r}"
                    )
                vertices.append(complex(float(parts[0]), float(parts[1])))
    if pole is None:
        raise DomainError(f"{path}: missing 'pole <re> <im>' header")
    return pole, PolylineArc(tuple(vertices))
