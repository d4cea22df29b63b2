"""Hyperbolic distances, geodesics, and the excluded-disk geometry.

The metric convention is curvature -4: the disk distance is
``d(z, w) = artanh |(z - w) / (1 - z conj(w))|``.

The excluded disk attached to a pole location ``p`` is the closed disk with
real center ``(1 + p^2) / (2p)`` and radius ``(1 - p^2) / (2p)``; its boundary
circle meets ``D`` in the geodesic through ``p`` symmetric about the real
axis. ``Omega`` is the complementary side of that geodesic containing the
origin, ``Omega1`` its Cayley image in ``H`` containing ``i``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .conformal import ComplexLike, alpha_from_p, as_complex, _check_unit_interval
from .errors import DomainError

#: Arcs with radius beyond this are represented as straight geodesics.
STRAIGHT_SNAP_RADIUS = 1e8

#: Tolerance for "lies on the boundary" style predicates.
ON_BOUNDARY_TOL = 1e-10


@dataclass(frozen=True)
class Geodesic:
    """A hyperbolic geodesic of the disk or the upper half-plane.

    Either a circular arc orthogonal to the ambient boundary (``kind="arc"``,
    with ``center`` and ``radius``) or a straight one (``kind="line"``: a
    diameter of the disk or a vertical ray of the half-plane). ``endpoints``
    are the two ideal endpoints on the ambient boundary.
    """

    kind: str
    ambient: str
    endpoints: tuple[complex, complex]
    center: complex | None = None
    radius: float | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("arc", "line"):
            raise DomainError(f"unknown geodesic kind {self.kind!r}")
        if self.ambient not in ("disk", "halfplane"):
            raise DomainError(f"unknown ambient {self.ambient!r}")
        if self.kind == "arc":
            if self.center is None or self.radius is None or self.radius <= 0:
                raise DomainError("arc geodesics need a center and a positive radius")
            if self.ambient == "disk":
                gap = abs(self.center) ** 2 - self.radius**2 - 1.0
                if abs(gap) > 1e-9 * (1.0 + self.radius**2):
                    raise DomainError("arc is not orthogonal to the unit circle")
            else:
                if abs(self.center.imag) > 1e-12 * (1.0 + abs(self.center)):
                    raise DomainError("half-plane geodesic arcs are centered on the real axis")
            for e in self.endpoints:
                if abs(abs(e - self.center) - self.radius) > 1e-12 * max(1.0, self.radius):
                    raise DomainError("endpoint does not lie on the geodesic circle")
        if self.ambient == "disk":
            for e in self.endpoints:
                if abs(abs(e) - 1.0) > 1e-12:
                    raise DomainError("disk geodesic endpoints must lie on the unit circle")
        else:
            for e in self.endpoints:
                if abs(e.imag) > 1e-12 * max(1.0, abs(e)):
                    raise DomainError("half-plane geodesic endpoints must be real")


@dataclass(frozen=True)
class ExcludedDisk:
    """The closed disk cut away from ``D`` by the geodesic through ``p``."""

    p: float
    center: float
    radius: float

    @classmethod
    def from_pole(cls, p: float) -> "ExcludedDisk":
        p = _check_unit_interval(p, "p")
        return cls(p, (1.0 + p * p) / (2.0 * p), (1.0 - p * p) / (2.0 * p))

    def boundary_gap(self, z: ComplexLike) -> float:
        """Signed distance to the boundary circle (positive outside)."""
        return abs(as_complex(z) - self.center) - self.radius

    def contains(self, z: ComplexLike, closed: bool = True) -> bool:
        gap = self.boundary_gap(z)
        return gap <= 0.0 if closed else gap < 0.0


def hyp_dist_disk(z: ComplexLike, w: ComplexLike) -> float:
    """Hyperbolic distance between two points of the open unit disk.

    Returns ``inf`` when the pseudo-distance ratio rounds to 1, which happens
    once both points sit within roughly 1e-13 of the unit circle: the true
    distance then exceeds what doubles can resolve (about 18.4).
    """
    zz, ww = as_complex(z), as_complex(w)
    if abs(zz) >= 1.0 or abs(ww) >= 1.0:
        raise DomainError("hyp_dist_disk needs points strictly inside the unit disk")
    t = abs((zz - ww) / (1.0 - zz * ww.conjugate()))
    return math.inf if t >= 1.0 else math.atanh(t)


def separating_geodesic(p: float) -> Geodesic:
    """The disk geodesic through ``p`` symmetric about the real axis.

    This is the boundary arc of the excluded disk; its ideal endpoints are
    ``alpha +- i sqrt(1 - alpha^2)``.
    """
    disk = ExcludedDisk.from_pole(p)
    alpha = alpha_from_p(p)
    h = math.sqrt(1.0 - alpha * alpha)
    return Geodesic(
        kind="arc",
        ambient="disk",
        endpoints=(complex(alpha, h), complex(alpha, -h)),
        center=complex(disk.center, 0.0),
        radius=disk.radius,
    )


def separating_geodesic_halfplane(p: float) -> Geodesic:
    """The Cayley image of :func:`separating_geodesic`: a half-plane semicircle.

    Its endpoints are ``-p`` and ``-1/p`` and its center the real point
    ``-(1 + p^2) / (2p)``.
    """
    disk = ExcludedDisk.from_pole(p)
    return Geodesic(
        kind="arc",
        ambient="halfplane",
        endpoints=(complex(-p, 0.0), complex(-1.0 / p, 0.0)),
        center=complex(-disk.center, 0.0),
        radius=disk.radius,
    )


def disk_geodesic_between(e1: complex, e2: complex) -> Geodesic:
    """The disk geodesic with ideal endpoints ``e1``, ``e2`` on the unit circle.

    Near-antipodal endpoints give an enormous orthogonal circle; arcs with
    radius beyond :data:`STRAIGHT_SNAP_RADIUS` are snapped to the diameter
    case for numerical stability.
    """
    for e in (e1, e2):
        if abs(abs(e) - 1.0) > 1e-9:
            raise DomainError("geodesic endpoints must lie on the unit circle")
    # Solve Re(e1 conj(c)) = Re(e2 conj(c)) = 1 for the orthogonal center c.
    det = e1.real * e2.imag - e1.imag * e2.real
    if det != 0.0:
        cx = (e2.imag - e1.imag) / det
        cy = (e1.real - e2.real) / det
        center = complex(cx, cy)
        radius = math.sqrt(max(abs(center) ** 2 - 1.0, 0.0))
        if radius <= STRAIGHT_SNAP_RADIUS:
            return Geodesic(
                kind="arc", ambient="disk", endpoints=(e1, e2), center=center, radius=radius
            )
    return Geodesic(kind="line", ambient="disk", endpoints=(e1, e2))


def in_omega(z: ComplexLike, p: float) -> bool:
    """Strict membership in Omega: inside ``D`` and outside the excluded disk.

    Boundary points return ``False``.
    """
    zz = as_complex(z)
    disk = ExcludedDisk.from_pole(p)
    return abs(zz) < 1.0 and disk.boundary_gap(zz) > 0.0


def in_omega1(z: ComplexLike, p: float) -> bool:
    """Strict membership in Omega1, the Cayley image of Omega in ``H``."""
    zz = as_complex(z)
    disk = ExcludedDisk.from_pole(p)
    return zz.imag > 0.0 and abs(zz + disk.center) - disk.radius > 0.0


def on_separating_geodesic(z: ComplexLike, p: float, tol: float = ON_BOUNDARY_TOL) -> bool:
    """Whether ``z`` lies on the separating geodesic within ``tol``."""
    zz = as_complex(z)
    disk = ExcludedDisk.from_pole(p)
    return abs(zz) < 1.0 and abs(disk.boundary_gap(zz)) <= tol


def disk_nesting(p1: float, p2: float) -> bool:
    """Whether the excluded disk of ``p2`` sits inside the one of ``p1``.

    Requires ``p1 <= p2``; decided by the center/radius inequality
    ``c1 - c2 + r2 <= r1`` (all four quantities are exact rational functions
    of the poles, so a 1e-12 slack absorbs rounding only).
    """
    p1 = _check_unit_interval(p1, "p1")
    p2 = _check_unit_interval(p2, "p2")
    if p1 > p2:
        raise DomainError("disk_nesting expects p1 <= p2")
    d1 = ExcludedDisk.from_pole(p1)
    d2 = ExcludedDisk.from_pole(p2)
    return d1.center - d2.center + d2.radius <= d1.radius + 1e-12


_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def hyp_dist_to_vertical_segment(s: ComplexLike, y1: float, y2: float) -> float:
    """Hyperbolic distance from ``s`` to the segment ``[i y1, i y2]`` of the
    closed vertical diameter.

    The distance along the diameter is unimodal, so a 64-point bracket scan
    followed by golden-section refinement (interval tolerance 1e-12) finds
    the minimum; the brute-force grid oracle in the test-suite validates the
    unimodality assumption.
    """
    ss = as_complex(s)
    if abs(ss) >= 1.0:
        raise DomainError("s must lie strictly inside the unit disk")
    if not (-1.0 <= y1 < y2 <= 1.0):
        raise DomainError("need -1 <= y1 < y2 <= 1")
    if ss.real == 0.0 and y1 <= ss.imag <= y2:
        return 0.0

    # The ideal endpoints +-i are at infinite distance; the minimum is interior.
    lo = max(y1, -1.0 + 1e-12)
    hi = min(y2, 1.0 - 1e-12)

    def dist(y: float) -> float:
        return hyp_dist_disk(ss, complex(0.0, y))

    n = 64
    ys = [lo + (hi - lo) * k / n for k in range(n + 1)]
    vals = [dist(y) for y in ys]
    i = vals.index(min(vals))
    a = ys[max(i - 1, 0)]
    b = ys[min(i + 1, n)]

    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = dist(c), dist(d)
    while b - a > 1e-12:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = dist(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = dist(d)
    return dist((a + b) / 2.0)
