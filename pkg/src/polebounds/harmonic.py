"""Harmonic measure of real-axis segments, exactly and by Monte Carlo.

Exact evaluation on the upper half-plane uses the subtended-angle formula;
on Omega1 it pulls back through the conformal map ``psi`` of
:func:`polebounds.conformal.omega1_to_halfplane`, which sends positive-axis
segments to positive-axis segments. The walk-on-spheres estimator is an
independent stochastic oracle for the same quantities: it never touches the
exact formulas.

``measure_cot_bound`` is the closed-form upper bound for ``cot(pi * omega)``
on the vertical segment ``[ia, ib]``; together with the half-plane comparison
it sandwiches the Omega1 measure:

    arccot(measure_cot_bound(p, b/a)) / pi  <=  omega(z, [a, b], Omega1)  <=  1/2

for ``z`` on ``[ia, ib]``. The arccot convention everywhere is
``arccot x = atan2(1, x)``, with values in (0, pi).
"""

from __future__ import annotations

import math
from cmath import phase
from dataclasses import dataclass

import numpy as np

from .conformal import ComplexLike, as_complex, omega1_to_halfplane, _check_unit_interval
from .errors import DomainError, UnsupportedDomainError
from .hyperbolic import ExcludedDisk, in_omega1

#: Default seed for every stochastic routine; fixed so runs are reproducible.
DEFAULT_SEED = 1729

#: Default absorption layer width for walk-on-spheres.
DEFAULT_WOS_EPS = 1e-6

#: Per-walk step cap; capped walks are discarded and reported.
WOS_STEP_CAP = 10**6


def arccot(x: float) -> float:
    """Arc-cotangent with values in (0, pi): ``atan2(1, x)``."""
    return math.atan2(1.0, x)


@dataclass(frozen=True)
class SegmentQuery:
    """A harmonic-measure query: evaluation point and positive-axis segment."""

    z: complex
    a: float
    b: float
    p: float | None = None

    def __post_init__(self) -> None:
        if not 0.0 < self.a < self.b:
            raise DomainError("need 0 < a < b")
        if self.p is not None and not in_omega1(self.z, self.p):
            raise DomainError("z must lie in Omega1 for a constrained query")


def hm_halfplane(z: ComplexLike, a: float, b: float) -> float:
    """Harmonic measure of the segment ``[a, b]`` seen from ``z`` in ``H``.

    Equals ``1/pi`` times the angle subtended by the segment at ``z``;
    additive over adjacent segments.
    """
    zz = as_complex(z)
    if zz.imag <= 0.0:
        raise DomainError("z must lie in the open upper half-plane")
    if not a < b:
        raise DomainError("need a < b")
    # Both z-a and z-b lie in H, so the phase difference is already in (0, pi).
    w = (phase(zz - b) - phase(zz - a)) / math.pi
    if not 0.0 < w < 1.0:
        raise ArithmeticError(f"subtended angle left (0, pi): w={w!r}")
    return w


def hm_omega1(z: ComplexLike, a: float, b: float, p: float) -> float:
    """Harmonic measure of ``[a, b]`` seen from ``z`` in Omega1.

    Exact by conformal invariance: ``psi`` maps Omega1 onto ``H`` and the
    segment onto ``[psi(a), psi(b)]``.
    """
    zz = as_complex(z)
    if not 0.0 < a < b:
        raise DomainError("need 0 < a < b")
    if not in_omega1(zz, p):
        raise DomainError("z must lie in Omega1")
    pa = omega1_to_halfplane(complex(a, 0.0), p).re
    pb = omega1_to_halfplane(complex(b, 0.0), p).re
    return hm_halfplane(omega1_to_halfplane(zz, p).value, pa, pb)


def measure_cot_bound(p: float, q: float) -> float:
    """Closed-form bound for ``cot(pi * omega)`` on the vertical segment.

    For a segment with endpoint ratio ``q = b/a``:

        (q+1)/(q-1) + (1-p^2)^2 (1+q^2) / (2p (q-1) (4p sqrt(q) + (1+q)(1+p^2)))

    Strictly positive; tends to ``(q+1)/(q-1)`` as ``p -> 1``.
    """
    p = _check_unit_interval(p, "p")
    if not q > 1.0:
        raise DomainError(f"q must exceed 1, got {q!r}")
    first = (q + 1.0) / (q - 1.0)
    second = (1.0 - p * p) ** 2 * (1.0 + q * q) / (
        2.0 * p * (q - 1.0) * (4.0 * p * math.sqrt(q) + (1.0 + q) * (1.0 + p * p))
    )
    return first + second


@dataclass(frozen=True)
class WosEstimate:
    """Result of a walk-on-spheres run: mean, binomial standard error, counts."""

    mean: float
    stderr: float
    n_walks: int
    n_used: int
    n_capped: int


def wos_harmonic_measure(
    z: ComplexLike,
    a: float,
    b: float,
    p: float,
    n_walks: int,
    eps: float = DEFAULT_WOS_EPS,
    seed: int = DEFAULT_SEED,
) -> WosEstimate:
    """Walk-on-spheres estimate of the harmonic measure of ``[a, b]``.

    The domain is Omega1 for ``p`` in (0, 1); ``p = 1`` degenerates the
    excluded disk to a point and the domain to the full half-plane (useful for
    validating against :func:`hm_halfplane`). Each step jumps to a uniform
    point on the largest inscribed circle at the current position; a walk is
    absorbed once within ``eps`` of the boundary and scores 1 when its nearest
    boundary point lies in ``[a, b]`` on the real axis. Walks exceeding the
    step cap are discarded and reported in ``n_capped``.

    All walks advance in lockstep on a single seeded generator, so a given
    ``(inputs, seed)`` pair always reproduces the same estimate.
    """
    zz = as_complex(z)
    if n_walks < 1:
        raise DomainError("n_walks must be at least 1")
    if eps <= 0.0:
        raise DomainError("eps must be positive")
    if not a < b:
        raise DomainError("need a < b")
    halfplane_only = p == 1.0
    if halfplane_only:
        if zz.imag <= 0.0:
            raise DomainError("z must lie in the open upper half-plane")
        center = radius = 0.0
    else:
        if not 0.0 < a:
            raise DomainError("need 0 < a < b for an Omega1 query")
        if not in_omega1(zz, p):
            raise DomainError("z must lie in Omega1")
        disk = ExcludedDisk.from_pole(p)
        center, radius = disk.center, disk.radius

    rng = np.random.default_rng(seed)
    pts = np.full(n_walks, complex(zz), dtype=np.complex128)
    active = np.arange(n_walks)
    hit = np.zeros(n_walks, dtype=bool)
    capped = 0

    for _ in range(WOS_STEP_CAP):
        if active.size == 0:
            break
        cur = pts[active]
        d_axis = cur.imag
        if halfplane_only:
            dist = d_axis
        else:
            dist = np.minimum(d_axis, np.abs(cur + center) - radius)
        absorb = dist < eps
        if absorb.any():
            done = active[absorb]
            zdone = pts[done]
            if halfplane_only:
                nearest_on_axis = np.ones(done.size, dtype=bool)
            else:
                nearest_on_axis = zdone.imag <= np.abs(zdone + center) - radius
            x = zdone.real
            hit[done] = nearest_on_axis & (x >= a) & (x <= b)
            keep = ~absorb
            active = active[keep]
            dist = dist[keep]
        if active.size:
            theta = rng.uniform(0.0, 2.0 * math.pi, active.size)
            pts[active] += dist * np.exp(1j * theta)
    else:
        capped = int(active.size)

    n_used = n_walks - capped
    if n_used == 0:
        raise ArithmeticError("all walks hit the step cap")
    mean = float(hit.sum()) / n_used
    stderr = math.sqrt(mean * (1.0 - mean) / n_used)
    return WosEstimate(mean=mean, stderr=stderr, n_walks=n_walks, n_used=n_used, n_capped=capped)


@dataclass(frozen=True)
class DistanceMeasureCheck:
    """Both sides of the boundary-distance inequality, plus the verdict."""

    delta: float
    bound: float
    measure: float
    passed: bool


def check_distance_measure_bound(
    domain: str,
    a: float,
    b: float,
    w: ComplexLike,
    d: float,
    w0: ComplexLike,
    p: float | None = None,
) -> DistanceMeasureCheck:
    """Check ``delta_D(w) <= d * cot^2(pi * omega(w, [a, b], D) / 4)``.

    Supported domains are the two where both sides are exactly computable:
    ``"halfplane"`` and ``"omega1"`` (the latter needs ``p``). The segment
    ``[a, b]`` must lie on the boundary and inside the closed disk of radius
    ``d`` around ``w0``, with ``w0`` outside the domain.
    """
    ww, w0c = as_complex(w), as_complex(w0)
    if not a < b:
        raise DomainError("need a < b")
    if d <= 0.0:
        raise DomainError("d must be positive")
    if max(abs(complex(a, 0.0) - w0c), abs(complex(b, 0.0) - w0c)) > d * (1.0 + 1e-12):
        raise DomainError("segment [a, b] is not contained in the disk B(w0, d)")

    if domain == "halfplane":
        if w0c.imag > 0.0:
            raise DomainError("w0 must lie outside the open upper half-plane")
        delta = ww.imag
        measure = hm_halfplane(ww, a, b)
    elif domain == "omega1":
        if p is None:
            raise DomainError("omega1 queries need the pole parameter p")
        if in_omega1(w0c, p):
            raise DomainError("w0 must lie outside Omega1")
        disk = ExcludedDisk.from_pole(p)
        delta = min(ww.imag, abs(ww + disk.center) - disk.radius)
        measure = hm_omega1(ww, a, b, p)
    else:
        raise UnsupportedDomainError(
            f"domain {domain!r} not supported; use 'halfplane' or 'omega1'"
        )

    bound = d / math.tan(math.pi * measure / 4.0) ** 2
    return DistanceMeasureCheck(
        delta=delta, bound=bound, measure=measure, passed=delta <= bound + 1e-12
    )
