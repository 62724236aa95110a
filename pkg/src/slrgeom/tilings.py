"""Regular prism tilings T_p(q) generated by the space group pq2_1.

The base figure P(p, q) is centred at the origin with vertices
``A_1 ... A_p`` in the base plane.  ``A_1`` sits on the positive ``y`` axis
(polar angle 0) and ``A_2`` at polar angle ``2 pi / p``, matching the
parametrisation of the side curve ``c_{A1 A2}`` below.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq

from slrgeom.errors import (
    ConsistencyError,
    DomainError,
    InvalidArgument,
    ParameterDomainError,
    QuadratureError,
)
from slrgeom.model import (
    IDENTITY,
    Isometry,
    ProjPoint,
    fibre_translation,
    rotation_about_origin,
    translation_to,
)

QUAD_ABS_TOL = 1e-10
AREA_REL_TOL = 1e-6
RELATION_TOL = 1e-9


@dataclass(frozen=True)
class TilingParams:
    p: int
    q: int

    def __post_init__(self):
        _check_pair(self.p, self.q)

    @property
    def psi(self):
        """Prism height ``2 (pi/2 - pi/p - pi/q)``."""
        return prism_height(self)


def _check_pair(p, q):
    if isinstance(p, bool) or isinstance(q, bool) or not (
        isinstance(p, (int, np.integer)) and isinstance(q, (int, np.integer))
    ):
        raise InvalidArgument(f"p and q must be integers, got ({p!r}, {q!r})")
    if p < 3:
        raise ParameterDomainError(p, q, "p must be at least 3")
    # q > 2p/(p-2) without floating point
    if q * (p - 2) <= 2 * p:
        raise ParameterDomainError(p, q, "q must exceed 2p/(p-2)")


def validate(p, q):
    """Checked tiling parameters; raises :class:`ParameterDomainError` naming the constraint."""
    return TilingParams(p, q)


def is_valid(p, q):
    try:
        _check_pair(p, q)
    except (ParameterDomainError, InvalidArgument):
        return False
    return True


def prism_height(params):
    return 2.0 * (math.pi / 2 - math.pi / params.p - math.pi / params.q)


def vertex_model_radius(params, printed=False):
    """Euclidean model distance ``b = tanh(OA_1)`` of the base vertices.

    The symmetric denominator ``1 + tan(pi/p) tan(pi/q)`` is used; the
    alternative ``1 + tan^2(pi/q)`` (``printed=True``) does not reproduce
    the tabulated covering radii.
    """
    tp, tq = math.tan(math.pi / params.p), math.tan(math.pi / params.q)
    den = 1.0 + (tq * tq if printed else tp * tq)
    return math.sqrt((1.0 - tp * tq) / den)


def vertex_radius(params, printed=False):
    """Hyperbolic circumradius ``R_opt(p, q)`` of the base figure."""
    return math.atanh(vertex_model_radius(params, printed))


def vertex(params, i=1):
    """Base vertex ``A_i`` (1-based) as a model point."""
    b = vertex_model_radius(params)
    ang = 2.0 * math.pi * (i - 1) / params.p
    return ProjPoint((1.0, 0.0, b * math.cos(ang), b * math.sin(ang)))


def side_curve_yz(params, t):
    """``(y, z)`` model coordinates of the side curve ``c_{A1 A2}`` at ``t``.

    ``t`` may be a scalar or an array; ``t = 0`` gives ``A_1``, ``t = 1``
    gives ``A_2``.
    """
    t = np.asarray(t)
    P, Q = math.pi / params.p, math.pi / params.q
    s2 = math.sin(2 * P + 2 * Q)
    sp, cp = math.sin(P + Q), math.cos(P + Q)
    sin2p, cos2p = math.sin(2 * P), math.cos(2 * P)
    root = math.sqrt(s2)
    den = math.sqrt(sin2p + math.sin(2 * Q)) * (sp * sp + t * t * cp * cp)
    y = root * (t * cos2p * sp * sp
                - 0.5 * t * sin2p * s2
                + sp * sp * (1 - t)
                + t * t * cp * math.cos(P - Q)) / den
    z = t * root * (sin2p * sp * sp
                    + 0.5 * cos2p * s2 * (1 - t)
                    + cp * (t * sin2p * cp + sp * (t - 1))) / den
    return y, z


def side_curve(params, t):
    if not 0.0 <= t <= 1.0:
        raise InvalidArgument(f"t must lie in [0, 1], got {t}")
    y, z = side_curve_yz(params, t)
    return ProjPoint((1.0, 0.0, float(y), float(z)))


def side_curvature(params):
    """Euclidean curvature ``C_p(q)`` of every side curve (they are circular arcs)."""
    P, Q = math.pi / params.p, math.pi / params.q
    num = math.cos(P + Q) * (math.sin(2 * P) + math.sin(2 * Q))
    den = math.sin(P + Q) * (1.0 - math.cos(2 * P))
    return math.sqrt(num / den)


@dataclass(frozen=True)
class SideArc:
    center: tuple[float, float]
    radius: float


@dataclass(frozen=True)
class BaseFigure:
    params: TilingParams
    vertex_model_radius: float
    side_arc: SideArc
    psi: float


def base_figure(params):
    b = vertex_model_radius(params)
    rho = 1.0 / side_curvature(params)
    half = math.pi / params.p
    # the arc through A1, A2 bulges towards the origin: centre lies beyond the chord
    d = b * math.cos(half) + math.sqrt(rho * rho - (b * math.sin(half)) ** 2)
    center = (d * math.cos(half), d * math.sin(half))
    return BaseFigure(params, b, SideArc(center, rho), prism_height(params))


def sector_volume(r_of_theta, theta1, theta2, psi=1.0):
    """Volume of the sector-like domain over ``theta1 <= theta <= theta2``,
    ``0 <= radius <= r_of_theta(theta)``, lifted by fibre height ``psi``.

    ``psi * integral (cosh(2 r(theta)) - 1) / 4 dtheta``; with ``psi = 1`` it
    is the area of the planar sector.
    """
    if not (math.isfinite(psi) and psi > 0):
        raise InvalidArgument(f"psi must be positive, got {psi!r}")

    def f(th):
        return 0.5 * math.sinh(r_of_theta(th)) ** 2

    val, err = quad(f, theta1, theta2, epsabs=QUAD_ABS_TOL, epsrel=1e-12, limit=200)
    if not err <= 10 * QUAD_ABS_TOL + 1e-12 * abs(val):
        raise QuadratureError("sector quadrature did not converge", err)
    return psi * val


def side_curve_radius(params):
    """Polar radius ``r(theta)`` of the side curve ``c_{A1 A2}``, ``0 <= theta <= 2 pi / p``.

    Inverts the polar angle of the parametrised curve numerically.
    """
    end = 2.0 * math.pi / params.p

    def angle(t):
        y, z = side_curve_yz(params, t)
        return math.atan2(z, y)

    def r_of_theta(theta):
        if theta <= 0.0:
            t = 0.0
        elif theta >= end:
            t = 1.0
        else:
            t = brentq(lambda u: angle(u) - theta, 0.0, 1.0, xtol=1e-15, rtol=1e-15)
        y, z = side_curve_yz(params, t)
        return math.atanh(math.hypot(y, z))

    return r_of_theta


def parametric_sector_volume(curve_yz, t0, t1, psi=1.0):
    """Like :func:`sector_volume`, for a boundary given as ``t -> (y, z)``.

    Integrates over ``t`` with ``dtheta = (y z' - z y') / (y^2 + z^2) dt``;
    the derivatives come from a complex step, so ``curve_yz`` must accept a
    complex scalar.  The polar angle must be monotone in ``t``.
    """
    if not (math.isfinite(psi) and psi > 0):
        raise InvalidArgument(f"psi must be positive, got {psi!r}")
    h = 1e-30

    def f(t):
        y, z = curve_yz(complex(t, h))
        y0, z0 = y.real, z.real
        dy, dz = y.imag / h, z.imag / h
        rho2 = y0 * y0 + z0 * z0
        # sinh^2 r / 2 with tanh r = rho
        return 0.5 * rho2 / (1.0 - rho2) * (y0 * dz - z0 * dy) / rho2

    val, err = quad(f, t0, t1, epsabs=QUAD_ABS_TOL, epsrel=1e-12, limit=200)
    if not err <= 10 * QUAD_ABS_TOL + 1e-12 * abs(val):
        raise QuadratureError("sector quadrature did not converge", err)
    return psi * val


def base_sector_volume(params, psi=1.0):
    """Volume of the sector ``O A_1 A_2`` lifted by ``psi``."""
    return parametric_sector_volume(lambda t: side_curve_yz(params, t), 0.0, 1.0, psi)


def base_area_closed_form(params):
    return params.p * (math.pi / 2 - math.pi / params.p - math.pi / params.q) / 2.0


@lru_cache(maxsize=4096)
def _base_area(p, q):
    params = TilingParams(p, q)
    numeric = params.p * base_sector_volume(params, 1.0)
    closed = base_area_closed_form(params)
    if abs(numeric - closed) > AREA_REL_TOL * abs(closed):
        raise ConsistencyError("base area quadrature disagrees with closed form",
                               numeric, closed)
    return closed


def base_area(params):
    """Area of the base figure P(p, q).

    Computed by sector quadrature along the side curve and checked against
    ``p (pi/2 - pi/p - pi/q) / 2`` (a quarter of the {p, q} mosaic tile);
    returns the closed form once both agree to 1e-6 relative.
    """
    return _base_area(int(params.p), int(params.q))


def prism_volume(params, psi=None):
    """Volume of the bounded prism of height ``psi`` (default: the tiling height)."""
    if psi is None:
        psi = prism_height(params)
    return params.p * base_sector_volume(params, psi)


@dataclass(frozen=True)
class GroupGenerators:
    params: TilingParams
    a: Isometry
    b: Isometry
    s: Isometry
    tau: Isometry
    tau_phi: float
    residuals: dict


def _tau_parameter(tau):
    m = tau.m
    phi = math.atan2(m[0, 1] - m[1, 0] + m[3, 2] - m[2, 3],
                     m[0, 0] + m[1, 1] + m[2, 2] + m[3, 3])
    return phi


def relation_residuals(a, b, p, q):
    ai, bi = a.inverse(), b.inverse()
    tau = a @ b @ a @ b
    phi = _tau_parameter(tau)
    return {
        "a^p": (a ** p).distance_to(IDENTITY),
        "b^q": (b ** q).distance_to(IDENTITY),
        "abab a^-1 b^-1 a^-1 b^-1": (tau @ ai @ bi @ ai @ bi).distance_to(IDENTITY),
        "tau ~ S(phi0)": tau.distance_to(fibre_translation(phi)),
        "a tau = tau a": (a @ tau).distance_to(tau @ a),
    }


def group_generators(params, tol=RELATION_TOL):
    """Matrices of the generators of pq2_1 and the derived screw / translation.

    ``a`` rotates by ``2 pi / p`` about the origin fibre, ``b`` by
    ``2 pi / q`` about the fibre through ``A_1``; ``s = b a b`` and
    ``tau = a b a b``.  All defining relations are checked; ``tau`` turns out
    to be the fibre translation ``S(psi)``, its parameter is stored in
    ``tau_phi``.

    Rounding in ``b`` is amplified by up to ``cond(T)^2`` in its powers
    (``T`` the translation to ``A_1``), so the check uses
    ``tol * max(1, cond(T))^2``; for ``p, q <= 12`` that factor is below 1e3
    and the actual residuals stay under 1e-11.
    """
    p, q = params.p, params.q
    a = rotation_about_origin(2.0 * math.pi / p)
    t = translation_to(vertex(params, 1))
    b = t.inverse() @ rotation_about_origin(2.0 * math.pi / q) @ t
    s = b @ a @ b
    tau = a @ b @ a @ b
    res = relation_residuals(a, b, p, q)
    limit = tol * max(1.0, float(np.linalg.cond(t.m))) ** 2
    bad = {k: v for k, v in res.items() if not v < limit}
    if bad:
        raise DomainError(f"group relations fail for (p, q) = ({p}, {q}): {bad}")
    return GroupGenerators(params, a, b, s, tau, _tau_parameter(tau), res)
