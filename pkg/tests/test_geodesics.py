import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, strategies as st

from slrgeom.errors import ConvergenceError, InvalidArgument
from slrgeom.geodesics import (GeodesicInitial, branch_of, closed_form_polar, closed_form_rates,
                               distance_from_origin, endpoint, euclidean_coords,
                               geodesic_closed_form, geodesic_ode, geodesic_rhs, longitude_for,
                               metric_at, ode_deviation)
from slrgeom.model import E0, ProjPoint

alphas = st.floats(-1.5, 1.5, allow_nan=False)
arcs = st.floats(0.0, 2.0, allow_nan=False)


def test_metric_examples():
    g0 = metric_at(0.0).g
    assert g0[1, 1] == 0 and g0[1, 2] == 0 and g0[0, 0] == 1 and g0[2, 2] == 1
    sh2 = math.sinh(1) ** 2
    assert metric_at(1.0).g[1, 1] == pytest.approx(sh2 * (sh2 + math.cosh(1) ** 2), rel=1e-15)
    # high-precision oracle
    sh2m = mpmath.sinh(1) ** 2
    assert metric_at(1.0).g[1, 1] == pytest.approx(float(sh2m * (sh2m + mpmath.cosh(1) ** 2)), rel=1e-14)
    with pytest.raises(InvalidArgument):
        metric_at(-1.0)


def test_metric_determinant():
    # det = sinh^2 r cosh^2 r; positive definite for r > 0
    for r in (0.1, 0.9, 2.0):
        m = metric_at(r)
        assert m.det == pytest.approx((math.sinh(r) * math.cosh(r)) ** 2, rel=1e-12)
        assert np.all(np.linalg.eigvalsh(m.g) > 0)


def christoffel_accel(r, v, h=1e-5):
    """-Gamma^k_ij v^i v^j from a finite-difference derivative of the metric."""
    g = metric_at(r).g
    dg = (metric_at(r + h).g - metric_at(r - h).g) / (2 * h)
    # only d/dr is non-zero: Gamma_{l,ij} = 0.5 (d_i g_lj + d_j g_li - d_l g_ij)
    d = np.zeros((3, 3, 3))
    d[0] = dg
    gam_low = 0.5 * (np.einsum("ilj->lij", d) + np.einsum("jli->lij", d) - d)
    gam = np.linalg.solve(g, gam_low.reshape(3, 9)).reshape(3, 3, 3)
    return -np.einsum("kij,i,j->k", gam, v, v)


@given(st.floats(0.05, 2.0), st.floats(-2, 2), st.floats(-2, 2), st.floats(-2, 2))
def test_rhs_matches_christoffel_symbols(r, dr, dth, dph):
    v = np.array([dr, dth, dph])
    want = christoffel_accel(r, v)
    got = np.array(geodesic_rhs(0.0, [r, 0.0, 0.0, dr, dth, dph])[3:])
    scale = 1.0 + np.abs(want).max()
    assert np.abs(got - want).max() / scale < 1e-6


def test_branches():
    assert branch_of(0.3) == "h2-like"
    assert branch_of(math.pi / 4) == "light"
    assert branch_of(1.0) == "fibre-like"
    assert GeodesicInitial(0.0, -1.0).branch == "fibre-like"


def test_initial_validation():
    with pytest.raises(InvalidArgument):
        GeodesicInitial(0.0, 2.0)
    with pytest.raises(InvalidArgument):
        GeodesicInitial(float("nan"), 0.1)
    with pytest.raises(InvalidArgument):
        GeodesicInitial(0.0, 0.1, s=-1)


def test_light_row():
    smp = geodesic_closed_form(GeodesicInitial(0.0, math.pi / 4, 1.0))
    h = math.sqrt(2) / 2
    assert smp.r == pytest.approx(math.asinh(h), abs=1e-15)
    assert smp.theta == pytest.approx(-math.atan(h), abs=1e-15)
    assert smp.phi == pytest.approx(math.sqrt(2) - math.atan(h), abs=1e-15)


@given(alphas)
def test_origin_at_zero(alpha):
    assert closed_form_polar(0.0, alpha) == (0.0, 0.0, 0.0) or np.allclose(
        closed_form_polar(0.0, alpha), 0.0, atol=0)


def test_pure_fibre_direction():
    r, th, ph = closed_form_polar(0.3, math.pi / 2)
    assert abs(r) < 1e-16
    assert ph == pytest.approx(2 * 0.3 + th)
    assert th == pytest.approx(-0.3)


def test_pure_base_direction():
    for s in (0.1, 1.0, 2.5):
        r, th, ph = closed_form_polar(s, 0.0)
        assert (r, th, ph) == pytest.approx((s, 0.0, 0.0), abs=1e-14)


@given(alphas, st.floats(0.0, 3.0))
def test_unit_speed(alpha, s):
    r, _, _ = closed_form_polar(s, alpha)
    v = np.array(closed_form_rates(s, alpha))
    assert v @ metric_at(abs(r)).g @ v == pytest.approx(1.0, abs=1e-10)


@given(alphas, st.floats(0.01, 3.0))
def test_rates_are_derivatives(alpha, s):
    h = 1e-6
    lo, hi = np.array(closed_form_polar(s - h, alpha)), np.array(closed_form_polar(s + h, alpha))
    fd = (hi - lo) / (2 * h)
    assert np.allclose(fd, closed_form_rates(s, alpha), atol=1e-6)


def test_unit_speed_finite_increments():
    # quadratic form on increments equals ds^2 up to O(ds^4)
    for alpha in (0.2, math.pi / 4, 1.1):
        for ds in (1e-2, 5e-3):
            s = 0.8
            a, b = np.array(closed_form_polar(s, alpha)), np.array(closed_form_polar(s + ds, alpha))
            rmid = closed_form_polar(s + ds / 2, alpha)[0]
            d = b - a
            assert abs(d @ metric_at(abs(rmid)).g @ d - ds * ds) < 10 * ds ** 4


def test_fibre_like_theta_is_continuous():
    alpha = 1.2
    s = np.linspace(0, 20, 4001)
    th = np.array([closed_form_polar(x, alpha)[1] for x in s])
    assert np.abs(np.diff(th)).max() < 0.1


def test_branch_continuity_at_light():
    for s in np.linspace(0.05, 2.0, 40):
        mid = np.array(closed_form_polar(s, math.pi / 4))
        for da in (-1e-6, 1e-6):
            assert np.abs(np.array(closed_form_polar(s, math.pi / 4 + da)) - mid).max() < 1e-4


@given(st.floats(-3, 3), alphas, st.floats(0.1, 2.0))
def test_longitude_rotates_yz(lam, alpha, s):
    a = geodesic_closed_form(GeodesicInitial(0.0, alpha, s))
    b = geodesic_closed_form(GeodesicInitial(lam, alpha, s))
    assume_finite = math.isfinite(a.X) and abs(a.X) < 1e6
    if not assume_finite:
        return
    c, sn = math.cos(lam), math.sin(lam)
    assert b.X == pytest.approx(a.X, abs=1e-9)
    assert b.Y == pytest.approx(c * a.Y - sn * a.Z, abs=1e-9 * (1 + abs(a.Y) + abs(a.Z)))
    assert b.Z == pytest.approx(sn * a.Y + c * a.Z, abs=1e-9 * (1 + abs(a.Y) + abs(a.Z)))


def test_sample_point_matches_euclidean_coords():
    smp = geodesic_closed_form(GeodesicInitial(0.4, 0.6, 1.2))
    X, Y, Z = euclidean_coords(smp.r, smp.theta, smp.phi)
    assert smp.point == ProjPoint((1.0, X, Y, Z))


def test_ode_examples():
    out = geodesic_ode(GeodesicInitial(0.0, 0.0), 1.0)
    last = out[-1]
    assert (last.r, last.theta, last.phi) == pytest.approx((1.0, 0.0, 0.0), abs=1e-8)
    for alpha, s_end in ((math.pi / 4, 2.0), (0.6, 1.5), (1.0, 1.5)):
        s = np.linspace(0, s_end, 30)
        assert ode_deviation(alpha, s[1:]) < 1e-8


def test_ode_respects_longitude():
    lam = 0.7
    out = geodesic_ode(GeodesicInitial(lam, 0.5), 1.0, s_eval=[0.0, 0.5, 1.0])
    for smp in out:
        ref = geodesic_closed_form(GeodesicInitial(lam, 0.5, smp.s))
        assert smp.theta == pytest.approx(ref.theta, abs=1e-8)


def test_ode_validation():
    init = GeodesicInitial(0.0, 0.5)
    with pytest.raises(InvalidArgument):
        geodesic_ode(init, -1.0)
    with pytest.raises(InvalidArgument):
        geodesic_ode(init, 1.0, s_eval=[0.5, 0.2])
    with pytest.raises(InvalidArgument):
        geodesic_ode(init, 1.0, s_eval=[2.0])


def test_distance_examples():
    assert distance_from_origin(E0) == 0.0
    assert distance_from_origin(ProjPoint((math.cosh(0.5), 0, math.sinh(0.5), 0))) == pytest.approx(0.5)
    p = endpoint(0.0, math.pi / 4, 1.0)
    assert distance_from_origin(p) == pytest.approx(1.0, abs=1e-6)


def test_distance_is_at_most_generating_arc():
    for lam, alpha, s in ((0.3, 0.5, 1.0), (-1.0, 1.0, 0.8)):
        p = endpoint(lam, alpha, s)
        d = distance_from_origin(p)
        assert 0 < d <= s + 1e-8


def test_longitude_recovery():
    lam, alpha, s = 0.9, 0.4, 1.3
    p = endpoint(lam, alpha, s)
    got = longitude_for(p, alpha, s)
    assert endpoint(got, alpha, s) == p


def test_distance_unreachable():
    p = endpoint(0.0, 0.3, 5.0)
    with pytest.raises(ConvergenceError):
        distance_from_origin(p, s_max=1.0)
