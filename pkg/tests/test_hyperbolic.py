"""Distances, geodesics, domain predicates, and disk nesting."""

import cmath
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from polebounds import (
    DomainError,
    ExcludedDisk,
    alpha_from_p,
    cayley,
    disk_geodesic_between,
    disk_nesting,
    hyp_dist_disk,
    hyp_dist_to_vertical_segment,
    in_omega,
    in_omega1,
    on_separating_geodesic,
    separating_geodesic,
    separating_geodesic_halfplane,
    vertical_translation,
)

RNG = np.random.default_rng(42)


def rand_disk(n, rmax=0.999):
    r = np.sqrt(RNG.uniform(0, 1, n)) * rmax
    th = RNG.uniform(0, 2 * np.pi, n)
    return r * np.exp(1j * th)


# -------------------------------------------------------------------- distance


def test_distance_from_origin_is_artanh():
    for x in np.linspace(0.0, 0.99, 34):
        assert hyp_dist_disk(0.0, complex(x, 0)) == pytest.approx(math.atanh(x), abs=1e-15)


def test_pole_is_hyperbolic_midpoint():
    for p in np.linspace(0.05, 0.95, 19):
        a = alpha_from_p(p)
        assert hyp_dist_disk(0.0, p) == pytest.approx(hyp_dist_disk(p, a), abs=1e-12)


def test_moebius_invariance_of_distance():
    for _ in range(300):
        z, w = (complex(v) for v in rand_disk(2))
        a = RNG.uniform(-0.95, 0.95)
        tz = vertical_translation(z, a).value
        tw = vertical_translation(w, a).value
        assert hyp_dist_disk(tz, tw) == pytest.approx(hyp_dist_disk(z, w), abs=1e-11, rel=1e-11)


def test_triangle_inequality():
    for _ in range(500):
        a, b, c = (complex(v) for v in rand_disk(3))
        assert hyp_dist_disk(a, c) <= hyp_dist_disk(a, b) + hyp_dist_disk(b, c) + 1e-12


def test_distance_symmetry_and_zero():
    z, w = 0.3 + 0.2j, -0.1 + 0.7j
    assert hyp_dist_disk(z, w) == hyp_dist_disk(w, z)
    assert hyp_dist_disk(z, z) == 0.0


@pytest.mark.parametrize("bad", [1.0 + 0j, 2j, -1.5])
def test_distance_rejects_points_outside_disk(bad):
    with pytest.raises(DomainError):
        hyp_dist_disk(bad, 0.0)


def test_distance_saturates_to_inf_at_double_resolution():
    # both points representable inside the disk, but the ratio rounds to 1
    s = 1 - 1e-13
    assert hyp_dist_disk(s, s * 1j) == math.inf
    # one point deep inside: still finite
    assert hyp_dist_disk(0.0, s) == pytest.approx(math.atanh(s))


def test_cayley_is_isometry_via_pullback():
    # d_D(z, w) equals the half-plane distance of the images, computed by
    # pulling the image pair back through the (involutive) map itself.
    for _ in range(200):
        z, w = (complex(v) for v in rand_disk(2, rmax=0.99))
        gz, gw = cayley(z).value, cayley(w).value
        back = hyp_dist_disk(cayley(gz).value, cayley(gw).value)
        assert back == pytest.approx(hyp_dist_disk(z, w), abs=1e-10, rel=1e-10)


# ------------------------------------------------------------------- geodesics


@pytest.mark.parametrize("p", [0.1, 0.3, 0.5, 0.7, 0.9, 0.99])
def test_separating_geodesic_shape(p):
    g = separating_geodesic(p)
    a = alpha_from_p(p)
    h = math.sqrt(1 - a * a)
    assert g.kind == "arc" and g.ambient == "disk"
    assert abs(g.endpoints[0] - complex(a, h)) < 1e-14
    assert abs(g.endpoints[1] - complex(a, -h)) < 1e-14
    # p lies on the arc; the arc is orthogonal to the unit circle
    assert abs(abs(complex(p, 0) - g.center) - g.radius) < 1e-12
    assert abs(g.center) ** 2 - g.radius**2 == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("p", [0.2, 0.5, 0.8])
def test_halfplane_geodesic_endpoints_and_cayley_image(p):
    s = separating_geodesic_halfplane(p)
    assert abs(s.endpoints[0] - (-p)) < 1e-14
    assert abs(s.endpoints[1] - (-1.0 / p)) < 1e-13
    assert s.endpoints[0].real * s.endpoints[1].real == pytest.approx(1.0, rel=1e-13)
    g = separating_geodesic(p)
    for theta in np.linspace(-1.2, 1.2, 50):
        z = g.center + g.radius * cmath.exp(1j * theta)
        if abs(z) >= 1.0:
            continue
        w = cayley(z).value
        assert abs(abs(w - s.center) - s.radius) < 1e-10


def test_geodesic_between_boundary_points():
    g = disk_geodesic_between(cmath.exp(0.3j), cmath.exp(2.1j))
    assert g.kind == "arc"
    assert abs(g.center) ** 2 - g.radius**2 == pytest.approx(1.0, abs=1e-9)
    line = disk_geodesic_between(cmath.exp(0.3j), -cmath.exp(0.3j))
    assert line.kind == "line"


def test_excluded_disk_invariants():
    for p in (0.1, 0.5, 0.9):
        d = ExcludedDisk.from_pole(p)
        assert abs(d.boundary_gap(complex(p, 0))) < 1e-12  # p on the boundary circle
        assert d.center > d.radius  # disjoint from the closed left half-disk


# ------------------------------------------------------------------ membership


@pytest.mark.parametrize("p", [0.05, 0.3, 0.6, 0.95])
def test_origin_and_i_memberships(p):
    assert in_omega(0.0, p)
    assert in_omega1(1j, p)
    assert not in_omega(complex(p, 0), p)  # boundary point
    assert on_separating_geodesic(complex(p, 0), p)


def test_omega1_is_cayley_image_of_omega():
    p = 0.45
    disk = ExcludedDisk.from_pole(p)
    pts = rand_disk(1000, rmax=0.995)
    pts = pts[np.abs(np.abs(pts - disk.center) - disk.radius) > 1e-9]
    for z in pts:
        z = complex(z)
        assert in_omega(z, p) == in_omega1(cayley(z).value, p)


# --------------------------------------------------------------------- nesting


def test_disk_nesting_examples():
    assert disk_nesting(0.3, 0.7)
    assert disk_nesting(0.5, 0.5)  # degenerate: identical disks
    with pytest.raises(DomainError):
        disk_nesting(0.7, 0.3)


@given(st.floats(min_value=0.01, max_value=0.98), st.floats(min_value=1e-6, max_value=0.01))
def test_disk_nesting_random_pairs(p1, gap):
    assert disk_nesting(p1, min(p1 + gap, 0.999))


def test_disk_nesting_boundary_sampling_oracle():
    for _ in range(50):
        p1 = RNG.uniform(0.02, 0.97)
        p2 = RNG.uniform(p1, 0.99)
        d1, d2 = ExcludedDisk.from_pole(p1), ExcludedDisk.from_pole(p2)
        assert disk_nesting(p1, p2)
        for theta in np.linspace(0, 2 * math.pi, 100, endpoint=False):
            z = d2.center + d2.radius * cmath.exp(1j * theta)
            assert d1.boundary_gap(z) <= 1e-12


# --------------------------------------------------- distance to axis segment


def test_segment_distance_from_real_point():
    assert hyp_dist_to_vertical_segment(0.5, -1.0, 1.0) == pytest.approx(
        math.atanh(0.5), abs=1e-10
    )


def test_segment_distance_zero_on_segment():
    assert hyp_dist_to_vertical_segment(0.3j, 0.0, 0.9) == 0.0


def test_segment_distance_matches_brute_force_grid():
    # frozen value from a 1e6-point grid scan (refined locally to 2e6 points)
    got = hyp_dist_to_vertical_segment(0.3 + 0.4j, 0.0, 0.9)
    assert got == pytest.approx(0.3663341280227053, abs=1e-8)


def test_segment_distance_unimodality_oracle():
    # golden-section result matches an independent dense scan on random cases
    for _ in range(25):
        s = complex(rand_disk(1, rmax=0.98)[0])
        y1 = RNG.uniform(-0.95, 0.5)
        y2 = RNG.uniform(y1 + 0.05, 0.99)
        got = hyp_dist_to_vertical_segment(s, y1, y2)
        ys = np.linspace(y1, y2, 100_001)
        brute = np.arctanh(np.abs((s - 1j * ys) / (1 - s * np.conj(1j * ys)))).min()
        assert got <= brute + 1e-12
        assert got == pytest.approx(brute, abs=1e-7)


def test_segment_distance_domain_errors():
    with pytest.raises(DomainError):
        hyp_dist_to_vertical_segment(1.2, -0.5, 0.5)
    with pytest.raises(DomainError):
        hyp_dist_to_vertical_segment(0.1, 0.5, 0.5)
