"""Geodesics through the origin of SL(2,R)~.

Arc-length square in hyperboloid coordinates::

    ds^2 = dr^2 + cosh^2 r sinh^2 r dtheta^2 + (dphi + sinh^2 r dtheta)^2

A unit-speed geodesic leaving the origin is fixed by its longitude ``lam``
and altitude ``alpha``; ``r(0) = theta(0) = phi(0) = 0``,
``r'(0) = cos alpha`` and ``phi'(0) = -theta'(0) = sin alpha``.  Three
closed-form branches exist depending on the sign of ``cos 2 alpha``.  The
ODE integrator is kept as an independent check of those formulas.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp
from scipy.optimize import least_squares

from slrgeom.errors import ConvergenceError, IntegrationError, InvalidArgument
from slrgeom.model import E0, ProjPoint, wrap_angle

# |cos 2 alpha| below this is treated as the light direction
LIGHT_EPS = 1e-12
ODE_SEED = 1e-4


@dataclass(frozen=True)
class MetricAt:
    r: float
    g: np.ndarray

    @property
    def det(self):
        return float(np.linalg.det(self.g))


def metric_at(r):
    """Metric tensor in ``(r, theta, phi)`` order at radius ``r``."""
    if not (math.isfinite(r) and r >= 0):
        raise InvalidArgument(f"radius must be finite and >= 0, got {r!r}")
    sh2 = math.sinh(r) ** 2
    ch2 = math.cosh(r) ** 2
    g = np.array([
        [1.0, 0.0, 0.0],
        [0.0, sh2 * (sh2 + ch2), sh2],
        [0.0, sh2, 1.0],
    ])
    g.setflags(write=False)
    return MetricAt(r, g)


@dataclass(frozen=True)
class GeodesicInitial:
    lam: float
    alpha: float
    s: float = 0.0

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.lam, self.alpha, self.s)):
            raise InvalidArgument("geodesic parameters must be finite")
        if abs(self.alpha) > math.pi / 2 + 1e-15:
            raise InvalidArgument(f"alpha must lie in [-pi/2, pi/2], got {self.alpha}")
        if self.s < 0:
            raise InvalidArgument(f"arc length must be >= 0, got {self.s}")

    @property
    def branch(self):
        return branch_of(self.alpha)


def branch_of(alpha):
    c2 = math.cos(2.0 * alpha)
    if abs(c2) <= LIGHT_EPS:
        return "light"
    return "h2-like" if c2 > 0 else "fibre-like"


@dataclass(frozen=True)
class GeodesicSample:
    """A point on a geodesic.

    ``theta`` already includes the longitude, i.e. ``(r, theta, phi)`` are
    the hyperboloid coordinates of the point.  ``r`` is signed: in the
    fibre-like branch it changes sign when the curve crosses the origin fibre.
    """

    s: float
    r: float
    theta: float
    phi: float
    X: float
    Y: float
    Z: float

    @property
    def point(self):
        return polar_point(self.r, self.theta, self.phi)


def polar_point(r, theta, phi):
    ch, sh = math.cosh(r), math.sinh(r)
    return ProjPoint((ch * math.cos(phi), ch * math.sin(phi),
                      sh * math.cos(theta - phi), sh * math.sin(theta - phi)))


def _continuous_neg_arctan_tan(k, u):
    """``-arctan(k tan u)`` continued through the poles of ``tan``."""
    n = math.floor(u / math.pi + 0.5)
    v = u - n * math.pi
    return -(math.atan2(k * math.sin(v), math.cos(v)) + n * math.pi)


def closed_form_polar(s, alpha):
    """Closed-form ``(r, theta, phi)`` at arc length ``s`` (longitude 0)."""
    c2 = math.cos(2.0 * alpha)
    sa, ca = math.sin(alpha), math.cos(alpha)
    if abs(c2) <= LIGHT_EPS:
        # sqrt(2)/2 = cos(pi/4) = sin(pi/4); keep the sign of alpha
        h = math.copysign(math.sqrt(2.0) / 2.0, sa)
        r = math.asinh(abs(h) * s)
        theta = -math.atan(h * s)
        return r, theta, 2.0 * sa * s + theta
    w = math.sqrt(abs(c2))
    if c2 > 0:
        r = math.asinh(ca / w * math.sinh(s * w))
        theta = -math.atan(sa / w * math.tanh(s * w))
    else:
        r = math.asinh(ca / w * math.sin(s * w))
        theta = _continuous_neg_arctan_tan(sa / w, s * w)
    return r, theta, 2.0 * sa * s + theta


def closed_form_rates(s, alpha):
    """Derivatives ``(r', theta', phi')`` of :func:`closed_form_polar` in ``s``."""
    c2 = math.cos(2.0 * alpha)
    sa, ca = math.sin(alpha), math.cos(alpha)
    if abs(c2) <= LIGHT_EPS:
        h = math.copysign(math.sqrt(2.0) / 2.0, sa)
        dr = abs(h) / math.sqrt(1.0 + 0.5 * s * s)
        dth = -h / (1.0 + 0.5 * s * s)
        return dr, dth, 2.0 * sa + dth
    w = math.sqrt(abs(c2))
    a, b = ca / w, sa / w
    u = s * w
    if c2 > 0:
        dr = a * w * math.cosh(u) / math.sqrt(1.0 + (a * math.sinh(u)) ** 2)
        dth = -b * w / (math.cosh(u) ** 2 + (b * math.sinh(u)) ** 2)
    else:
        dr = a * w * math.cos(u) / math.sqrt(1.0 + (a * math.sin(u)) ** 2)
        dth = -b * w / (math.cos(u) ** 2 + (b * math.sin(u)) ** 2)
    return dr, dth, 2.0 * sa + dth


def euclidean_coords(r, theta, phi):
    """Model coordinates ``(X, Y, Z)``; ``theta`` must already include the longitude."""
    t = math.tanh(r) / math.cos(phi)
    return math.tan(phi), t * math.cos(theta - phi), t * math.sin(theta - phi)


def _sample(s, r, theta, phi):
    X, Y, Z = euclidean_coords(r, theta, phi)
    return GeodesicSample(s, r, theta, phi, X, Y, Z)


def geodesic_closed_form(init):
    r, theta, phi = closed_form_polar(init.s, init.alpha)
    return _sample(init.s, r, theta + init.lam, phi)


def geodesic_rhs(_s, u):
    """First-order system of the geodesic equations.

    ``u = (r, theta, phi, r', theta', phi')``.  The theta equation carries a
    minus sign; this is what the Euler-Lagrange equations of the metric give
    and what the closed forms satisfy.
    """
    r, _th, _ph, dr, dth, dph = u
    s2r = math.sinh(2.0 * r)
    ddr = s2r * dth * dph + 0.5 * (math.sinh(4.0 * r) - s2r) * dth * dth
    ddth = -2.0 * dr / s2r * ((3.0 * math.cosh(2.0 * r) - 1.0) * dth + 2.0 * dph)
    ddph = 2.0 * dr * math.tanh(r) * (2.0 * math.sinh(r) ** 2 * dth + dph)
    return [dr, dth, dph, ddr, ddth, ddph]


def geodesic_ode(init, s_end, tol=1e-10, s_eval=None, samples=50):
    """Integrate the geodesic equations from the origin.

    The system is singular at ``r = 0``, so integration starts at
    ``s = 1e-4`` from the closed-form state there.  Requested samples with
    ``s`` below the seed are returned from that seed state's closed form.

    Returns a list of :class:`GeodesicSample` at ``s_eval`` (default:
    ``samples`` uniform points on ``[0, s_end]``).
    """
    if not (math.isfinite(s_end) and s_end > 0):
        raise InvalidArgument(f"s_end must be positive, got {s_end!r}")
    if s_eval is None:
        s_eval = np.linspace(0.0, s_end, samples)
    s_eval = np.asarray(s_eval, dtype=float)
    if np.any(s_eval < 0) or np.any(s_eval > s_end):
        raise InvalidArgument("s_eval must lie in [0, s_end]")
    if np.any(np.diff(s_eval) < 0):
        raise InvalidArgument("s_eval must be non-decreasing")

    alpha = init.alpha
    s0 = min(ODE_SEED, s_end)
    y0 = [*closed_form_polar(s0, alpha), *closed_form_rates(s0, alpha)]
    out = []
    late = s_eval[s_eval > s0]
    sol = None
    if late.size:
        sol = solve_ivp(geodesic_rhs, (s0, s_end), y0, method="DOP853",
                        rtol=tol, atol=tol, t_eval=late)
        if sol.status != 0:
            raise IntegrationError(f"geodesic integration failed: {sol.message}",
                                   float(sol.t[-1]) if sol.t.size else s0)
    k = 0
    for s in s_eval:
        if s <= s0:
            r, th, ph = closed_form_polar(s, alpha)
        else:
            r, th, ph = sol.y[0, k], sol.y[1, k], sol.y[2, k]
            k += 1
        out.append(_sample(float(s), float(r), float(th) + init.lam, float(ph)))
    return out


def _fibre_residual(v, target):
    alpha, s = v
    r, _th, phi = closed_form_polar(s, alpha)
    ch = math.cosh(r)
    return [ch * math.cos(phi) - target[0], ch * math.sin(phi) - target[1]]


def distance_from_origin(p, grid=8, s_max=6.0, tol=1e-9):
    """Geodesic distance from the origin to ``p`` (best effort).

    Solves for ``(alpha, s)`` such that the geodesic endpoint has the
    target's fibre block ``(x0, x1)``, starting from a ``grid x grid`` lattice
    of initial guesses; the longitude then follows in closed form because
    rotations about the origin fibre only shift ``theta``.  Returns the
    smallest ``s`` among converged solutions.  This is a search, not a proof
    of minimality.
    """
    target = p.unit()
    if np.allclose(target, E0.coords, rtol=0, atol=1e-15):
        return 0.0
    tgt_polar_rho = math.hypot(target[2], target[3])
    # base-plane points: the radial geodesic is the shortest one
    if abs(target[1]) <= 1e-15 and target[0] > 0:
        return math.asinh(tgt_polar_rho)

    best = None
    best_res = math.inf
    alphas = np.linspace(-math.pi / 2, math.pi / 2, grid + 2)[1:-1]
    ss = np.linspace(0.0, s_max, grid + 1)[1:]
    for a0, s0 in itertools.product(alphas, ss):
        sol = least_squares(_fibre_residual, [a0, s0], args=(target,),
                            bounds=([-math.pi / 2, 0.0], [math.pi / 2, s_max]),
                            xtol=1e-15, ftol=1e-15, gtol=1e-15, max_nfev=200)
        res = float(np.abs(sol.fun).max())
        if res < best_res:
            best_res = res
        if res <= tol:
            s = float(sol.x[1])
            if best is None or s < best:
                best = s
    if best is None:
        raise ConvergenceError("no geodesic from the origin reached the point", best_res)
    return best


def endpoint(lam, alpha, s):
    """Model point reached from the origin along ``(lam, alpha)`` after arc length ``s``."""
    r, th, ph = closed_form_polar(s, alpha)
    return polar_point(r, th + lam, ph)


def longitude_for(p, alpha, s):
    """Longitude placing the ``(alpha, s)`` endpoint onto ``p``'s fibre position."""
    x = p.unit()
    r, th, ph = closed_form_polar(s, alpha)
    ang = math.atan2(x[3], x[2]) + ph
    if r < 0:
        ang += math.pi
    return wrap_angle(ang - th)


def ode_deviation(alpha, s_values, tol=1e-10, lam=0.0):
    """Largest componentwise gap ``|closed form - ODE|`` over ``(r, theta, phi)``."""
    s_values = np.asarray(s_values, dtype=float)
    init = GeodesicInitial(lam, alpha)
    num = geodesic_ode(init, float(s_values.max()), tol=tol, s_eval=s_values)
    worst = 0.0
    for smp in num:
        r, th, ph = closed_form_polar(smp.s, alpha)
        worst = max(worst, abs(smp.r - r), abs(smp.theta - lam - th), abs(smp.phi - ph))
    return worst
