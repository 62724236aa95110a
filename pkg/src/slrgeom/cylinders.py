"""Fibre-like circular cylinders.

A fibre-like cylinder of radius ``r`` is the union of the fibre lines through
a base-plane circle of hyperbolic radius ``r`` about the origin.  In the
model it is the Euclidean one-sheeted hyperboloid
``(y^2 + z^2) / tanh^2 r - x^2 = 1``.

All radii taken or returned here are hyperbolic, except the fields of
:class:`TranslatedBaseCircle`, which describe a Euclidean circle in the
model plane.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.optimize import brentq

from slrgeom.errors import DomainError, InvalidArgument, UnsupportedOperation
from slrgeom.model import InhomPoint
from slrgeom.tilings import vertex_radius


@dataclass(frozen=True)
class Cylinder:
    r: float
    psi: float | None = None

    def __post_init__(self):
        if not (math.isfinite(self.r) and self.r > 0):
            raise InvalidArgument(f"cylinder radius must be positive, got {self.r!r}")
        if self.psi is not None and not (math.isfinite(self.psi) and self.psi > 0):
            raise InvalidArgument(f"cylinder height must be positive, got {self.psi!r}")

    @property
    def bounded(self):
        return self.psi is not None


def quadric_residual(cyl, p):
    """Left side minus right side of the cylinder's model equation; 0 on the surface."""
    t2 = math.tanh(cyl.r) ** 2
    return (p.y * p.y + p.z * p.z) / t2 - p.x * p.x - 1.0


@dataclass(frozen=True)
class TranslatedBaseCircle:
    """Section of a translated cylinder with the base plane.

    ``center`` is the foot point of the translated cylinder axis.  The
    section is a Euclidean circle of radius ``radius_euclidean`` about
    ``euclidean_center``; the two centres differ unless the translation is
    trivial.
    """

    center: InhomPoint
    radius_euclidean: float
    euclidean_center: InhomPoint


def translated_base_circle(cyl, t, printed=False):
    """Base-plane section of the cylinder moved by the translation with
    parameters ``(x1, x2, x3)`` (``x0 = 1``).

    ``printed=True`` uses ``tanh^2 r`` in the numerator of the radius; that
    variant does not give ``tanh r`` for the identity translation and is kept
    only for comparison.
    """
    x1, x2, x3 = (float(v) for v in t)
    th = math.tanh(cyl.r)
    n = x2 * x2 + x3 * x3
    a = 1.0 + x1 * x1
    den = a - th * th * n
    num = a - n
    if not (den > 0 and num > 0):
        raise DomainError("translated cylinder does not cut the base plane in a bounded circle")
    scale = th * th if printed else th
    radius = scale * num / den
    kx, ky = (x2 - x1 * x3) / a, (x3 + x1 * x2) / a
    shrink = a * (1.0 - th * th) / den
    return TranslatedBaseCircle(
        InhomPoint(0.0, kx, ky),
        radius,
        InhomPoint(0.0, kx * shrink, ky * shrink),
    )


def touching_radius(r, printed=False):
    """Euclidean radius of the base section of a copy translated by ``2 r``
    (the distance at which neighbouring cylinders touch).

    ``printed=True`` evaluates the alternative form with ``1 - tanh^2 r`` in
    the numerator, which is monotone and has no interior maximum.
    """
    t, t2r = math.tanh(r), math.tanh(2.0 * r)
    lead = 1.0 - (t * t if printed else t2r * t2r)
    return t * lead / (1.0 - t2r * t2r * t * t)


def _touching_slope(r):
    # d/dr of touching_radius has the sign of 1 - 6 t^2 - 3 t^4, t = tanh r
    t2 = math.tanh(r) ** 2
    return 1.0 - 6.0 * t2 - 3.0 * t2 * t2


def max_touching_radius():
    """Maximiser ``r*`` of :func:`touching_radius` and the maximum value."""
    r_star = brentq(_touching_slope, 1e-6, 3.0, xtol=1e-15, rtol=1e-15)
    return r_star, touching_radius(r_star)


def circle_perimeter(r):
    if r < 0:
        raise InvalidArgument(f"radius must be >= 0, got {r}")
    return 2.0 * math.pi * math.sinh(r) * math.sqrt(math.cosh(2.0 * r))


def circle_area(r):
    if r < 0:
        raise InvalidArgument(f"radius must be >= 0, got {r}")
    return math.pi * math.sinh(r) ** 2


def _require_bounded(cyl):
    if not cyl.bounded:
        raise UnsupportedOperation("infinite cylinder has no finite surface area or volume")


def cylinder_surface_area(cyl):
    """Lateral strip plus both cover faces."""
    _require_bounded(cyl)
    r = cyl.r
    return 2.0 * math.pi * math.sinh(r) * (math.sqrt(math.cosh(2.0 * r)) * cyl.psi + math.sinh(r))


def cylinder_volume(cyl):
    _require_bounded(cyl)
    return cyl.psi * circle_area(cyl.r)


def inscribed_radius(params):
    """Radius ``r_opt(p, q)`` of the circle inscribed in the base figure."""
    c = math.cos(math.pi / params.q)
    s = math.sin(math.pi / params.p)
    return math.atanh(math.sqrt((c - s) / (c + s)))


def circumscribed_radius(params):
    """Radius ``R_opt(p, q)`` of the circle through the base vertices."""
    return vertex_radius(params)
