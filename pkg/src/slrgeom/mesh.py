"""Quad meshes of cylinder and prism side surfaces, Wavefront OBJ output.

Surfaces are swept by fibre translations: a base-plane curve point
``(0, y, z)`` is moved to ``(tan phi, (y + z tan phi), (z - y tan phi))``
for ``phi`` in ``[0, psi]``.  The sweep reaches the ideal plane at
``phi = pi/2``, so ``psi`` must stay below it for finite vertices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from slrgeom.errors import InvalidArgument
from slrgeom.tilings import TilingParams, side_curve_yz

MIN_ANGULAR = 8
MIN_AXIAL = 2


@dataclass(frozen=True)
class MeshSpec:
    kind: str
    psi: float
    resolution: tuple[int, int]
    r: float | None = None
    params: TilingParams | None = None

    def __post_init__(self):
        if self.kind not in ("cylinder", "prism"):
            raise InvalidArgument(f"unknown mesh kind {self.kind!r}")
        na, nz = self.resolution
        if na < MIN_ANGULAR or nz < MIN_AXIAL:
            raise InvalidArgument(
                f"resolution must be at least ({MIN_ANGULAR}, {MIN_AXIAL}), got {self.resolution}")
        if not (math.isfinite(self.psi) and self.psi > 0):
            raise InvalidArgument(f"psi must be positive, got {self.psi!r}")
        if self.psi >= math.pi / 2:
            raise InvalidArgument("psi must be below pi/2: the sweep would reach the ideal plane x0 = 0")
        if self.kind == "cylinder" and not (self.r is not None and self.r > 0):
            raise InvalidArgument("cylinder mesh needs a positive radius")
        if self.kind == "prism" and self.params is None:
            raise InvalidArgument("prism mesh needs (p, q)")


@dataclass
class Mesh:
    vertices: np.ndarray
    faces: list


def sweep(yz, phis):
    """Fibre-translate base-plane points ``yz`` (n x 2) through each ``phi``.

    Returns an array of shape ``(n, len(phis), 3)`` in ``(x, y, z)``.
    """
    y, z = yz[:, 0:1], yz[:, 1:2]
    t = np.tan(np.asarray(phis))[None, :]
    x = np.broadcast_to(t, (yz.shape[0], t.shape[1]))
    return np.stack([x, y + z * t, z - y * t], axis=-1)


def _grid_faces(n_ang, n_ax, offset, closed):
    faces = []
    last = n_ang if closed else n_ang - 1
    for k in range(last):
        k1 = (k + 1) % n_ang
        for j in range(n_ax - 1):
            a = offset + k * n_ax + j
            b = offset + k1 * n_ax + j
            faces.append((a, b, b + 1, a + 1))
    return faces


def cylinder_mesh(r, psi, resolution):
    na, nz = resolution
    th = np.linspace(0.0, 2.0 * math.pi, na, endpoint=False)
    yz = math.tanh(r) * np.stack([np.cos(th), np.sin(th)], axis=1)
    pts = sweep(yz, np.linspace(0.0, psi, nz + 1))
    return Mesh(pts.reshape(-1, 3), _grid_faces(na, nz + 1, 0, closed=True))


def _rotate_yz(yz, ang):
    c, s = math.cos(ang), math.sin(ang)
    return np.stack([c * yz[:, 0] - s * yz[:, 1], s * yz[:, 0] + c * yz[:, 1]], axis=1)


def prism_mesh(params, psi, resolution):
    """Side sheets of the prism: ``p`` copies of the swept side curve.

    Each sheet is an open ``na x (nz + 1)`` grid; sheet ``i`` is sheet 0
    rotated by ``2 pi i / p`` about the origin fibre.
    """
    na, nz = resolution
    t = np.linspace(0.0, 1.0, na)
    y, z = side_curve_yz(params, t)
    base = np.stack([y, z], axis=1)
    phis = np.linspace(0.0, psi, nz + 1)
    verts, faces = [], []
    for i in range(params.p):
        yz = _rotate_yz(base, 2.0 * math.pi * i / params.p)
        off = i * na * (nz + 1)
        verts.append(sweep(yz, phis).reshape(-1, 3))
        faces.extend(_grid_faces(na, nz + 1, off, closed=False))
    return Mesh(np.concatenate(verts), faces)


def build_mesh(spec):
    if spec.kind == "cylinder":
        return cylinder_mesh(spec.r, spec.psi, spec.resolution)
    return prism_mesh(spec.params, spec.psi, spec.resolution)


def write_obj(mesh, fh, precision=10):
    """Write ``v x y z`` lines and 1-based ``f`` quads (counter-clockwise from outside)."""
    fmt = f"v {{:.{precision}f}} {{:.{precision}f}} {{:.{precision}f}}\n"
    # round first so values like -1e-17 do not print as -0.000...
    for v in np.round(mesh.vertices, precision) + 0.0:
        fh.write(fmt.format(*v))
    for f in mesh.faces:
        fh.write("f " + " ".join(str(i + 1) for i in f) + "\n")
