"""Optimal cylinder packing / covering densities and their H^2 counterparts.

The packing (covering) density of a prism tiling T_p(q) is the area of the
inscribed (circumscribed) base circle divided by the area of the base
figure.  Each quantity is exactly half (radii) or a quarter (areas) of the
matching quantity for the regular {p, q} mosaic of H^2, so the densities
coincide with the classical circle packing/covering densities of those
mosaics.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from slrgeom.cylinders import circle_area, circumscribed_radius, inscribed_radius
from slrgeom.errors import DomainError, GeometryError
from slrgeom.tilings import TilingParams, base_area, base_sector_volume

PACKING_LIMIT = 3.0 / math.pi
COVERING_LIMIT = math.sqrt(12.0) / math.pi

MODES = ("packing", "covering")


@dataclass(frozen=True)
class DensityRow:
    p: int
    q: int
    radius: float
    circle_area: float
    base_area: float
    density: float

    def as_dict(self):
        return {
            "p": self.p,
            "q": self.q,
            "radius": self.radius,
            "circle_area": self.circle_area,
            "base_area": self.base_area,
            "density": self.density,
        }


def _row(params, radius):
    area = circle_area(radius)
    base = base_area(params)
    return DensityRow(params.p, params.q, radius, area, base, area / base)


def packing_density(params):
    return _row(params, inscribed_radius(params))


def covering_density(params):
    return _row(params, circumscribed_radius(params))


@dataclass(frozen=True)
class MosaicData:
    p: int
    q: int
    r_h: float
    R_h: float
    cell_area: float


def mosaic_data(p, q):
    """Inradius, circumradius and tile area of the regular {p, q} tessellation of H^2."""
    if p < 3 or q < 3 or 2 * (p + q) >= p * q:
        raise DomainError(f"{{{p}, {q}}} is not a hyperbolic tessellation (need 1/p + 1/q < 1/2)")
    a, b = math.pi / p, math.pi / q
    return MosaicData(
        p, q,
        math.acosh(math.cos(b) / math.sin(a)),
        math.acosh(1.0 / (math.tan(a) * math.tan(b))),
        2.0 * p * (math.pi / 2 - a - b),
    )


def hyperbolic_circle_area(r):
    """Area of a circle of radius ``r`` in H^2 (curvature -1)."""
    return 4.0 * math.pi * math.sinh(r / 2.0) ** 2


@dataclass(frozen=True)
class IdentityReport:
    p: int
    q: int
    residuals: dict

    @property
    def max_residual(self):
        return max(self.residuals.values())


def verify_theorem_5_1(params):
    """Residuals of the five factor-2 / factor-4 identities linking the
    prism tiling T_p(q) with the {p, q} mosaic.

    Mosaic quantities are closed forms; the base-figure area is the sector
    quadrature along the side curves, so the last identity is not a
    tautology.  Area identities are compared relative to ``max(1, |area|)``
    since circumcircle areas reach ~1e3 on typical ranges; radius identities
    absolutely.
    """
    m = mosaic_data(params.p, params.q)
    r, R = inscribed_radius(params), circumscribed_radius(params)
    base = params.p * base_sector_volume(params)

    def rel(x, y):
        return abs(x - y) / max(1.0, abs(y))

    res = {
        "r_h = 2 r_opt": abs(m.r_h - 2.0 * r),
        "R_h = 2 R_opt": abs(m.R_h - 2.0 * R),
        "Area C(r_h) = 4 Area C(r_opt)": rel(hyperbolic_circle_area(m.r_h), 4.0 * circle_area(r)),
        "Area C(R_h) = 4 Area C(R_opt)": rel(hyperbolic_circle_area(m.R_h), 4.0 * circle_area(R)),
        "Area M = 4 Area P": rel(m.cell_area, 4.0 * base),
    }
    return IdentityReport(params.p, params.q, res)


@dataclass(frozen=True)
class LimitReport:
    q: int
    ps: tuple
    packing: tuple
    covering: tuple
    packing_gap: float
    covering_gap: float
    packing_monotone: bool
    covering_monotone: bool


def asymptotic_limits(q, ps):
    """Densities along increasing ``p`` and their distance to 3/pi and sqrt(12)/pi."""
    ps = tuple(sorted(ps))
    pack = tuple(packing_density(TilingParams(p, q)).density for p in ps)
    cover = tuple(covering_density(TilingParams(p, q)).density for p in ps)
    return LimitReport(
        q, ps, pack, cover,
        abs(pack[-1] - PACKING_LIMIT),
        abs(cover[-1] - COVERING_LIMIT),
        all(a < b for a, b in zip(pack, pack[1:])) and pack[-1] < PACKING_LIMIT,
        all(a > b for a, b in zip(cover, cover[1:])) and cover[-1] > COVERING_LIMIT,
    )


class TableError(GeometryError):
    def __init__(self, index, pair, cause):
        self.index = index
        self.pair = pair
        self.cause = cause
        super().__init__(f"pair #{index} {pair}: {cause}")


def generate_table(mode, pairs, jobs=1):
    """One :class:`DensityRow` per ``(p, q)`` in input order.

    All pairs are validated before any work starts; the first invalid one
    raises :class:`TableError` carrying its index.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    params = []
    for i, (p, q) in enumerate(pairs):
        try:
            params.append(TilingParams(p, q))
        except GeometryError as exc:
            raise TableError(i, (p, q), exc) from exc
    fn = packing_density if mode == "packing" else covering_density
    if jobs <= 1 or len(params) < 2:
        return [fn(pp) for pp in params]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, params))
