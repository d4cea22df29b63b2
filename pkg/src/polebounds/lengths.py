"""Arc-length quadrature of image curves and the built-in univalent test families.

The length of the image of a parametrized curve ``t -> g(t)`` under a map
``f`` is ``integral of |f'(g(t))| |g'(t)| dt``, computed here by adaptive
Simpson quadrature with Richardson extrapolation. Curves carry an exact
distance-to-point function so pole proximity can be rejected before any
integrand evaluation.

Two map families are built in, both univalent on the disk with a simple pole
at ``p``:

* ``mobius_family``: ``f(z) = 1 / (z - p)`` -- images of circles and lines are
  again circles or lines, so quadrature results can be cross-checked against
  closed-form arc lengths.
* ``koebe_family``: ``k(z) = p z / ((p - z)(1 - p z))``, the Joukowski-type
  map with ``1/k(z) = z + 1/z - (p + 1/p)``. It sends the unit circle into
  the extended real line and realizes the lower bound exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from .bounds import BoundResult, minimize_over_q
from .conformal import _check_unit_interval
from .errors import DomainError, PoleProximityError, QuadratureError

#: Curves must stay at least this far from the pole of the integrated map.
POLE_GUARD_DISTANCE = 1e-6

#: Default absolute quadrature tolerance per curve.
DEFAULT_LENGTH_TOL = 1e-9

#: Maximum adaptive-subdivision depth.
MAX_QUAD_DEPTH = 40


@dataclass(frozen=True)
class Curve:
    """A parametrized path with exact point/velocity/distance evaluations."""

    point: Callable[[float], complex]
    velocity: Callable[[float], complex]
    t0: float
    t1: float
    label: str
    distance_to: Callable[[complex], float]


def _segment_distance(z0: complex, z1: complex, w: complex) -> float:
    d = z1 - z0
    denom = abs(d) ** 2
    if denom == 0.0:
        return abs(w - z0)
    t = max(0.0, min(1.0, ((w - z0) * d.conjugate()).real / denom))
    return abs(w - (z0 + t * d))


def segment_curve(z0: complex, z1: complex, label: str = "segment") -> Curve:
    """The straight segment from ``z0`` to ``z1`` on ``t`` in [0, 1]."""
    if z0 == z1:
        raise DomainError("segment endpoints must be distinct")
    d = z1 - z0
    return Curve(
        point=lambda t: z0 + t * d,
        velocity=lambda t: d,
        t0=0.0,
        t1=1.0,
        label=label,
        distance_to=lambda w: _segment_distance(z0, z1, w),
    )


def vertical_diameter() -> Curve:
    """The vertical diameter of the unit disk, ``t -> it`` on [-1, 1]."""
    return Curve(
        point=lambda t: complex(0.0, t),
        velocity=lambda t: 1j,
        t0=-1.0,
        t1=1.0,
        label="I1",
        distance_to=lambda w: _segment_distance(-1j, 1j, w),
    )


def left_half_circle() -> Curve:
    """The left half of the unit circle, ``theta -> e^{i theta}`` on [pi/2, 3pi/2]."""

    def dist(w: complex) -> float:
        r = abs(w)
        if r == 0.0:
            return 1.0
        theta = math.atan2(w.imag, w.real)
        if abs(theta) > math.pi / 2.0:
            return abs(r - 1.0)
        # Nearest arc point is one of the endpoints +-i.
        return min(abs(w - 1j), abs(w + 1j))

    return Curve(
        point=lambda t: complex(math.cos(t), math.sin(t)),
        velocity=lambda t: complex(-math.sin(t), math.cos(t)),
        t0=math.pi / 2.0,
        t1=3.0 * math.pi / 2.0,
        label="T-",
        distance_to=dist,
    )


@dataclass(frozen=True)
class TestFunction:
    """A univalent test map: evaluation, derivative, and its pole location."""

    __test__ = False  # keep pytest from collecting this as a test class

    id: str
    evaluate: Callable[[complex], complex]
    derivative: Callable[[complex], complex]
    pole: complex
    params: dict = field(default_factory=dict)


def mobius_family(p: complex) -> TestFunction:
    """``f(z) = 1 / (z - p)``: the simplest univalent map with a pole at ``p``."""
    p = complex(p)
    if abs(p) >= 1.0:
        raise DomainError("the pole must lie inside the unit disk")
    return TestFunction(
        id="mobius",
        evaluate=lambda z: 1.0 / (z - p),
        derivative=lambda z: -1.0 / (z - p) ** 2,
        pole=p,
        params={"p": p},
    )


def koebe_family(p: complex) -> TestFunction:
    """``k(z) = p z / ((p - z)(1 - p z))``, univalent with a simple pole at ``p``.

    The reciprocal is the shifted Joukowski map ``z + 1/z - (p + 1/p)``, which
    is univalent on the disk; the unit circle goes into the extended real
    line, so the image of the left half-circle has finite length.
    """
    p = complex(p)
    if not 0.0 < abs(p) < 1.0:
        raise DomainError("the pole must lie inside the unit disk and away from 0")
    return TestFunction(
        id="koebe",
        evaluate=lambda z: p * z / ((p - z) * (1.0 - p * z)),
        derivative=lambda z: p * p * (1.0 - z * z) / ((p - z) ** 2 * (1.0 - p * z) ** 2),
        pole=p,
        params={"p": p},
    )


FAMILIES: dict[str, Callable[[complex], TestFunction]] = {
    "mobius": mobius_family,
    "koebe": koebe_family,
}


def _adaptive_simpson(
    f: Callable[[float], float], a: float, b: float, tol: float
) -> tuple[float, float]:
    fa, fm, fb = f(a), f(0.5 * (a + b)), f(b)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)

    def recurse(a, b, fa, fm, fb, whole, tol, depth):
        m = 0.5 * (a + b)
        lm, rm = 0.5 * (a + m), 0.5 * (m + b)
        flm, frm = f(lm), f(rm)
        left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
        right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
        err = (left + right - whole) / 15.0
        if abs(err) <= tol:
            return left + right + err, abs(err)
        if depth >= MAX_QUAD_DEPTH:
            raise QuadratureError(
                f"adaptive Simpson did not converge within depth {MAX_QUAD_DEPTH}"
            )
        lv, le = recurse(a, m, fa, flm, fm, left, tol / 2.0, depth + 1)
        rv, re = recurse(m, b, fm, frm, fb, right, tol / 2.0, depth + 1)
        return lv + rv, le + re

    return recurse(a, b, fa, fm, fb, whole, tol, 0)


def image_curve_length(
    f: TestFunction, curve: Curve, tol: float = DEFAULT_LENGTH_TOL
) -> tuple[float, float]:
    """Length of ``f(curve)`` with an absolute error estimate.

    Rejects curves that approach the pole of ``f`` closer than
    :data:`POLE_GUARD_DISTANCE`.
    """
    if tol <= 0.0:
        raise DomainError("tol must be positive")
    gap = curve.distance_to(complex(f.pole))
    if gap < POLE_GUARD_DISTANCE:
        raise PoleProximityError(
            f"curve {curve.label!r} passes within {gap:.3g} of the pole {f.pole}"
        )

    def integrand(t: float) -> float:
        return abs(f.derivative(curve.point(t))) * abs(curve.velocity(t))

    return _adaptive_simpson(integrand, curve.t0, curve.t1, tol)


def polyline_image_length(
    f: TestFunction, vertices: tuple[complex, ...], tol: float = DEFAULT_LENGTH_TOL
) -> tuple[float, float]:
    """Image length of a polyline, summed segment by segment."""
    if len(vertices) < 2:
        raise DomainError("a polyline needs at least two vertices")
    per_segment = tol / (len(vertices) - 1)
    total = err = 0.0
    for z0, z1 in zip(vertices, vertices[1:]):
        v, e = image_curve_length(f, segment_curve(z0, z1), per_segment)
        total += v
        err += e
    return total, err


@dataclass(frozen=True)
class RatioReport:
    """Outcome of one empirical length-distortion check."""

    function_id: str
    p: float
    length_i1: float
    length_tminus: float
    ratio: float
    bound: BoundResult
    passed: bool
    error_i1: float
    error_tminus: float


def verify_inequality(f: TestFunction, p: float, tol: float = DEFAULT_LENGTH_TOL) -> RatioReport:
    """Check ``len(f(I1)) <= bound * len(f(T-))`` for a built-in test map.

    The bound is the minimized measure bound at ``p``. Both lengths come from
    adaptive quadrature at tolerance ``tol``.
    """
    p = _check_unit_interval(p, "p")
    if complex(f.pole) != complex(p, 0.0):
        raise DomainError(f"test function pole {f.pole} does not match p={p}")
    li1, e1 = image_curve_length(f, vertical_diameter(), tol)
    ltm, e2 = image_curve_length(f, left_half_circle(), tol)
    bound = minimize_over_q(p, "measure")
    ratio = li1 / ltm
    return RatioReport(
        function_id=f.id,
        p=p,
        length_i1=li1,
        length_tminus=ltm,
        ratio=ratio,
        bound=bound,
        passed=ratio <= bound.value,
        error_i1=e1,
        error_tminus=e2,
    )
