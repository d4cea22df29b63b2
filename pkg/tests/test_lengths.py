"""Quadrature of image-curve lengths and the built-in test families."""

import math

import numpy as np
import pytest

from polebounds import (
    DomainError,
    PoleProximityError,
    TestFunction,
    image_curve_length,
    koebe_family,
    left_half_circle,
    lower_bound,
    mobius_family,
    polyline_image_length,
    segment_curve,
    verify_inequality,
    vertical_diameter,
)

RNG = np.random.default_rng(99)

IDENTITY = TestFunction(
    id="identity", evaluate=lambda z: z, derivative=lambda z: 1.0, pole=complex(5.0, 5.0)
)


def rand_disk(n, rmax=0.999):
    r = np.sqrt(RNG.uniform(0, 1, n)) * rmax
    th = RNG.uniform(0, 2 * np.pi, n)
    return r * np.exp(1j * th)


# ------------------------------------------------- closed-form circle oracle


def circumcenter(z1: complex, z2: complex, z3: complex) -> complex:
    ax, ay, bx, by, cx, cy = z1.real, z1.imag, z2.real, z2.imag, z3.real, z3.imag
    d = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    ux = (
        (ax * ax + ay * ay) * (by - cy)
        + (bx * bx + by * by) * (cy - ay)
        + (cx * cx + cy * cy) * (ay - by)
    ) / d
    uy = (
        (ax * ax + ay * ay) * (cx - bx)
        + (bx * bx + by * by) * (ax - cx)
        + (cx * cx + cy * cy) * (bx - ax)
    ) / d
    return complex(ux, uy)


def arc_length_through(z1: complex, zmid: complex, z3: complex) -> float:
    """Exact length of the circular arc from z1 to z3 passing through zmid."""
    c = circumcenter(z1, zmid, z3)
    r = abs(z1 - c)
    a1 = math.atan2((z1 - c).imag, (z1 - c).real)
    am = math.atan2((zmid - c).imag, (zmid - c).real)
    a3 = math.atan2((z3 - c).imag, (z3 - c).real)
    ccw = (a3 - a1) % (2 * math.pi)
    mid_rel = (am - a1) % (2 * math.pi)
    sweep = ccw if mid_rel <= ccw else 2 * math.pi - ccw
    return r * sweep


# ------------------------------------------------------------------ quadrature


def test_identity_lengths_of_reference_curves():
    li, ei = image_curve_length(IDENTITY, vertical_diameter())
    lt, et = image_curve_length(IDENTITY, left_half_circle())
    assert li == pytest.approx(2.0, abs=1e-9)
    assert lt == pytest.approx(math.pi, abs=1e-9)
    assert ei < 1e-9 and et < 1e-9


@pytest.mark.parametrize("p", [0.1, 0.35, 0.5, 0.8])
def test_mobius_image_lengths_match_circle_oracle(p):
    f = mobius_family(p)
    ev = f.evaluate
    li, _ = image_curve_length(f, vertical_diameter())
    exact_i = arc_length_through(ev(-1j), ev(0.0), ev(1j))
    assert li == pytest.approx(exact_i, rel=1e-8)
    lt, _ = image_curve_length(f, left_half_circle())
    exact_t = arc_length_through(ev(1j), ev(-1.0), ev(-1j))
    assert lt == pytest.approx(exact_t, rel=1e-8)


def test_quadrature_consistency_when_halving_tol():
    f = mobius_family(0.4)
    for curve in (vertical_diameter(), left_half_circle()):
        l1, e1 = image_curve_length(f, curve, tol=1e-7)
        l2, _ = image_curve_length(f, curve, tol=5e-8)
        assert abs(l1 - l2) < max(e1, 1e-15)


def test_pole_proximity_guard():
    f = mobius_family(1e-7)
    with pytest.raises(PoleProximityError):
        image_curve_length(f, vertical_diameter())
    g = mobius_family(0.5)
    with pytest.raises(PoleProximityError):
        image_curve_length(g, segment_curve(0.0, 0.5 + 1e-9j))


def test_depth_cap_raises_on_unresolvable_spike():
    # pole just past the proximity guard: the integrand spike defeats depth 40
    from polebounds import QuadratureError

    f = mobius_family(complex(1.0000001e-6, 0.0))
    with pytest.raises(QuadratureError):
        image_curve_length(f, vertical_diameter())


def test_polyline_length_sums_segments():
    verts = (0.1 + 0.1j, -0.2 + 0.3j, -0.2 - 0.3j)
    total, err = polyline_image_length(IDENTITY, verts)
    expect = abs(verts[1] - verts[0]) + abs(verts[2] - verts[1])
    assert total == pytest.approx(expect, abs=1e-9)
    assert err < 1e-9


# -------------------------------------------------------------------- families


def test_mobius_family_injective_spot_check():
    f = mobius_family(0.3)
    zs = rand_disk(20_000)
    w = np.array([f.evaluate(complex(z)) for z in zs])
    for i in range(0, 20_000, 2):
        if zs[i] != zs[i + 1]:
            assert w[i] != w[i + 1]


def test_koebe_reciprocal_identity():
    # 1/k(z) - (z + 1/z) + p + 1/p == 0
    for p in (0.2, 0.5, 0.9):
        k = koebe_family(p).evaluate
        for z in rand_disk(1000):
            z = complex(z)
            if abs(z) < 1e-3 or abs(z - p) < 1e-3:
                continue
            resid = 1.0 / k(z) - (z + 1.0 / z) + p + 1.0 / p
            assert abs(resid) < 1e-12 * (1 + abs(1 / z))


def test_koebe_family_injective_spot_check():
    k = koebe_family(0.6)
    zs = rand_disk(20_000)
    for i in range(0, 20_000, 2):
        z1, z2 = complex(zs[i]), complex(zs[i + 1])
        if abs(z1 - 0.6) < 1e-3 or abs(z2 - 0.6) < 1e-3 or z1 == z2:
            continue
        assert k.evaluate(z1) != k.evaluate(z2)


@pytest.mark.parametrize("family", [mobius_family, koebe_family])
def test_derivative_matches_finite_differences(family):
    f = family(0.45)
    h = 1e-6
    for z in rand_disk(200, rmax=0.95):
        z = complex(z)
        if abs(z - 0.45) < 1e-2 or abs(abs(z) - 1) < 2 * h:
            continue
        fd = (f.evaluate(z + h) - f.evaluate(z - h)) / (2 * h)
        fd += (f.evaluate(z + 1j * h) - f.evaluate(z - 1j * h)) / (2j * h)
        assert abs(fd / 2 - f.derivative(z)) <= 1e-6 * max(1.0, abs(f.derivative(z)))


def test_pole_blows_up():
    for fam in (mobius_family, koebe_family):
        f = fam(0.5)
        mags = [abs(f.evaluate(0.5 + 10.0 ** (-k))) for k in (2, 4, 6)]
        assert mags == sorted(mags)
        assert mags[-1] > 1e5


def test_family_pole_validation():
    with pytest.raises(DomainError):
        mobius_family(1.2)
    with pytest.raises(DomainError):
        koebe_family(0.0)


# ---------------------------------------------------------------- verification


def test_verify_inequality_mobius():
    rep = verify_inequality(mobius_family(0.5), 0.5)
    assert rep.passed
    assert rep.ratio == rep.length_i1 / rep.length_tminus
    assert rep.bound.kind == "measure"


def test_verify_inequality_koebe():
    rep = verify_inequality(koebe_family(0.3), 0.3)
    assert rep.passed


def test_koebe_ratio_attains_lower_bound():
    # the Joukowski-type family realizes the lower bound exactly:
    # image of I1 is a full circle of diameter 1/(p + 1/p), image of T- a
    # doubly-traversed real segment
    for p in (0.15, 0.5, 0.85):
        rep = verify_inequality(koebe_family(p), p, tol=1e-10)
        c = p + 1.0 / p
        exact = (math.pi / c) / (2.0 * (1.0 / c - 1.0 / (2.0 + c)))
        assert rep.ratio == pytest.approx(exact, rel=1e-9)
        assert exact == pytest.approx(lower_bound(p), rel=1e-13)


def test_mobius_ratio_matches_closed_form_ratio():
    for p in (0.2, 0.5, 0.7):
        f = mobius_family(p)
        rep = verify_inequality(f, p)
        ev = f.evaluate
        exact = arc_length_through(ev(-1j), ev(0.0), ev(1j)) / arc_length_through(
            ev(1j), ev(-1.0), ev(-1j)
        )
        assert rep.ratio == pytest.approx(exact, rel=1e-8)


def test_verify_rejects_mismatched_pole():
    with pytest.raises(DomainError):
        verify_inequality(mobius_family(0.4), 0.5)
