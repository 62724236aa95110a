"""Projective hyperboloid model of the universal cover of SL(2,R).

Points are homogeneous row vectors ``(x0; x1; x2; x3)`` considered up to a
*positive* factor (projective sphere).  The model is the interior of the
one-sheeted hyperboloid ``-x0^2 - x1^2 + x2^2 + x3^2 < 0``.  Isometries are
4x4 matrices acting on the right of row vectors, again up to a positive
factor.

Only the explicit families used by the rest of the package are built here:
fibre translations, translations moving the origin, and rotations about
fibre lines.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from slrgeom.errors import DomainError, InvalidArgument

POINT_TOL = 1e-12
MATRIX_TOL = 1e-10

# signature (- - + +)
FORM = np.diag([-1.0, -1.0, 1.0, 1.0])


def _finite(name, value):
    if not math.isfinite(value):
        raise InvalidArgument(f"{name} must be finite, got {value!r}")
    return float(value)


def wrap_angle(a):
    """Reduce an angle to (-pi, pi]."""
    w = math.remainder(a, 2.0 * math.pi)
    return math.pi if w == -math.pi else w


def _normalize(a):
    scale = np.abs(a).max()
    return a / scale


@dataclass(frozen=True, eq=False)
class InhomPoint:
    """Euclidean model coordinates ``x = x1/x0, y = x2/x0, z = x3/x0``."""

    x: float
    y: float
    z: float

    def as_array(self):
        return np.array([self.x, self.y, self.z])

    def to_proj(self):
        return ProjPoint((1.0, self.x, self.y, self.z))


class ProjPoint:
    """Homogeneous model point, equal to every positive multiple of itself."""

    __slots__ = ("_c",)

    def __init__(self, coords):
        c = np.array(coords, dtype=float)
        if c.size != 4:
            raise InvalidArgument(f"a point needs 4 coordinates, got {c.size}")
        c = c.reshape(4)
        if not np.all(np.isfinite(c)):
            raise InvalidArgument(f"non-finite coordinates {c}")
        if not np.any(c):
            raise InvalidArgument("all four coordinates are zero")
        c.setflags(write=False)
        self._c = c

    @property
    def coords(self):
        return self._c

    def __iter__(self):
        return iter(self._c.tolist())

    def __repr__(self):
        return "ProjPoint({:.12g}; {:.12g}; {:.12g}; {:.12g})".format(*self._c)

    def quadratic_form(self):
        c = self._c
        return -c[0] ** 2 - c[1] ** 2 + c[2] ** 2 + c[3] ** 2

    def is_interior(self):
        """True iff the point lies inside the hyperboloid solid."""
        # scale-free test: normalize first so tiny coordinates don't underflow
        c = _normalize(self._c)
        return -c[0] ** 2 - c[1] ** 2 + c[2] ** 2 + c[3] ** 2 < 0.0

    def normalized(self):
        """Coordinates divided by the largest absolute coordinate."""
        return _normalize(self._c)

    def unit(self):
        """Representative with ``-x0^2-x1^2+x2^2+x3^2 = -1`` (positive scale)."""
        q = self.quadratic_form()
        if not q < 0:
            raise DomainError(f"{self!r} is not inside the model")
        return self._c / math.sqrt(-q)

    def distance_to(self, other):
        """Max-norm distance between normalized representatives."""
        return float(np.abs(self.normalized() - other.normalized()).max())

    def is_equivalent(self, other, tol=POINT_TOL):
        return self.distance_to(other) <= tol

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.is_equivalent(other)

    __hash__ = None

    def __matmul__(self, iso):
        if not isinstance(iso, Isometry):
            return NotImplemented
        return ProjPoint(self._c @ iso.m)

    def inhom(self):
        x0 = self._c[0]
        if x0 == 0.0:
            raise DomainError(f"{self!r} is an ideal point (x0 = 0)")
        return InhomPoint(*(self._c[1:] / x0).tolist())


E0 = ProjPoint((1.0, 0.0, 0.0, 0.0))


class Isometry:
    """4x4 matrix acting on row vectors from the right, up to a positive factor.

    Composition follows the action order: ``(A @ B)`` applies ``A`` first.
    """

    __slots__ = ("_m",)

    def __init__(self, m):
        m = np.array(m, dtype=float)
        if m.size != 16:
            raise InvalidArgument(f"an isometry needs a 4x4 matrix, got shape {m.shape}")
        m = m.reshape(4, 4)
        if not np.all(np.isfinite(m)):
            raise InvalidArgument("non-finite matrix entries")
        if abs(np.linalg.det(m)) < 1e-300:
            raise InvalidArgument("singular matrix")
        m.setflags(write=False)
        self._m = m

    @property
    def m(self):
        return self._m

    def __repr__(self):
        return f"Isometry(\n{np.array2string(self._m, precision=6)})"

    def __matmul__(self, other):
        if not isinstance(other, Isometry):
            return NotImplemented
        return Isometry(self._m @ other._m)

    def inverse(self):
        return Isometry(np.linalg.inv(self._m))

    def __pow__(self, n):
        if n < 0:
            return Isometry(np.linalg.matrix_power(np.linalg.inv(self._m), -n))
        return Isometry(np.linalg.matrix_power(self._m, n))

    def apply(self, point):
        return point @ self

    def form_factor(self):
        """Scalar ``c`` with ``M J M^T = c J``; ``c > 0`` for maps preserving the model."""
        g = self._m @ FORM @ self._m.T
        return g[2, 2]

    def preserves_form(self, tol=MATRIX_TOL):
        g = self._m @ FORM @ self._m.T
        c = g[2, 2]
        return c > 0 and np.abs(g - c * FORM).max() <= tol * abs(c)

    def distance_to(self, other):
        """Frobenius distance after scaling both matrices to unit max-entry.

        Only positive rescaling is used, so ``M`` and ``-M`` stay apart.
        """
        a = self._m / np.abs(self._m).max()
        b = other._m / np.abs(other._m).max()
        return float(np.linalg.norm(a - b))

    def is_equivalent(self, other, tol=MATRIX_TOL):
        return self.distance_to(other) <= tol

    def is_identity(self, tol=MATRIX_TOL):
        return self.is_equivalent(IDENTITY, tol)

    def __eq__(self, other):
        if not isinstance(other, Isometry):
            return NotImplemented
        return self.is_equivalent(other)

    __hash__ = None


IDENTITY = Isometry(np.eye(4))


def fibre_translation(phi):
    """Fibre translation S(phi); the fibre through a point is its S-orbit."""
    phi = _finite("phi", phi)
    c, s = math.cos(phi), math.sin(phi)
    return Isometry([
        [c, s, 0, 0],
        [-s, c, 0, 0],
        [0, 0, c, -s],
        [0, 0, s, c],
    ])


def _translation_matrix(x0, x1, x2, x3):
    return np.array([
        [x0, x1, x2, x3],
        [-x1, x0, x3, -x2],
        [x2, x3, x0, x1],
        [x3, -x2, -x1, x0],
    ])


def translation_to(target):
    """Translation T with ``E0 @ T == target``."""
    if not target.is_interior():
        raise DomainError(f"{target!r} lies outside the model")
    return Isometry(_translation_matrix(*target.coords))


def rotation_about_origin(omega):
    """Rotation by ``omega`` about the fibre line through the origin."""
    omega = _finite("omega", omega)
    c, s = math.cos(omega), math.sin(omega)
    return Isometry([
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, c, s],
        [0, 0, -s, c],
    ])


def rotation_about_fibre(center, omega):
    """Rotation by ``omega`` about the fibre line through ``center``.

    Conjugate of the origin rotation: move ``center`` to the origin, rotate,
    move back.
    """
    t = translation_to(center)
    return t.inverse() @ rotation_about_origin(omega) @ t


def foot_point(p):
    """Intersection of the fibre through ``p`` with the base plane ``x1 = 0``."""
    x0, x1, x2, x3 = p.coords
    return ProjPoint((x0 * x0 + x1 * x1, 0.0, x0 * x2 - x1 * x3, x0 * x3 + x1 * x2))


@dataclass(frozen=True)
class FiberPolar:
    """Hyperboloid coordinates: base-plane polar ``(r, theta)`` and fibre coordinate ``phi``."""

    r: float
    theta: float
    phi: float

    def __post_init__(self):
        for name in ("r", "theta", "phi"):
            _finite(name, getattr(self, name))
        if self.r < 0:
            raise InvalidArgument(f"r must be >= 0, got {self.r}")


def from_fiber_polar(c):
    r, th, ph = c.r, c.theta, c.phi
    ch, sh = math.cosh(r), math.sinh(r)
    return ProjPoint((
        ch * math.cos(ph),
        ch * math.sin(ph),
        sh * math.cos(th - ph),
        sh * math.sin(th - ph),
    ))


def to_fiber_polar(p, winding=0):
    """Inverse of :func:`from_fiber_polar`.

    ``phi`` is the principal value in (-pi, pi] plus ``2*pi*winding``; the
    finite model cannot tell sheets of the universal cover apart, so the lift
    is the caller's choice.  ``theta`` is 0 on the fibre through the origin.
    """
    x0, x1, x2, x3 = p.unit()
    phi = math.atan2(x1, x0)
    rho = math.hypot(x2, x3)
    r = math.asinh(rho)
    theta = 0.0 if rho == 0.0 else wrap_angle(math.atan2(x3, x2) + phi)
    return FiberPolar(r, theta, phi + 2.0 * math.pi * winding)


def inhom_from_polar(r, theta, phi):
    """Euclidean model coordinates of a hyperboloid-parametrized point."""
    t = math.tanh(r) / math.cos(phi)
    return InhomPoint(math.tan(phi), t * math.cos(theta - phi), t * math.sin(theta - phi))
