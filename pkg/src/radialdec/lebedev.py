"""Lebedev quadrature grids on the unit sphere.

Grids are expanded from octahedral-orbit generator parameters rather than
stored node lists.  Weights carry the 4*pi sphere measure, so the discrete
inner product of two unit-normalized harmonics is 1.
"""

from __future__ import annotations

import hashlib
import io
import itertools
from dataclasses import dataclass

import numpy as np

from . import charts
from ._lebedev_data import ORBITS, PRECISION
from .errors import UnsupportedGridError


def supported_counts() -> tuple[int, ...]:
    return tuple(sorted(ORBITS))


@dataclass(frozen=True)
class LebedevGrid:
    node_count: int
    precision: int
    xyz: np.ndarray
    theta: np.ndarray
    phi: np.ndarray
    weights: np.ndarray

    @property
    def max_degree(self) -> int:
        """Largest basis degree the grid can project: floor(precision / 2)."""
        return self.precision // 2


def _orbit_points(code: int, a: float, b: float) -> np.ndarray:
    """All signed permutations of the orbit's magnitude template."""
    if code == 0:
        template = (1.0, 0.0, 0.0)
    elif code == 1:
        r = np.sqrt(0.5)
        template = (r, r, 0.0)
    elif code == 2:
        r = np.sqrt(1.0 / 3.0)
        template = (r, r, r)
    elif code == 3:
        template = (a, a, np.sqrt(max(1.0 - 2.0 * a * a, 0.0)))
    elif code == 4:
        template = (a, np.sqrt(max(1.0 - a * a, 0.0)), 0.0)
    elif code == 5:
        template = (a, b, np.sqrt(max(1.0 - a * a - b * b, 0.0)))
    else:
        raise ValueError(f"unknown orbit code {code}")
    perms = sorted(set(itertools.permutations(template)))
    points = []
    for perm in perms:
        nonzero = [k for k, v in enumerate(perm) if v != 0.0]
        for signs in itertools.product((1.0, -1.0), repeat=len(nonzero)):
            p = list(perm)
            for k, s in zip(nonzero, signs):
                p[k] = p[k] * s
            points.append(p)
    return np.array(points)


_ORBIT_SIZES = {0: 6, 1: 12, 2: 8, 3: 24, 4: 24, 5: 48}
_cache: dict[int, LebedevGrid] = {}


def grid(node_count: int) -> LebedevGrid:
    """Build (and cache) the Lebedev grid with the given node count."""
    if node_count not in ORBITS:
        raise UnsupportedGridError(
            f"no Lebedev grid with {node_count} nodes; supported counts: "
            f"{', '.join(str(c) for c in supported_counts())}"
        )
    if node_count in _cache:
        return _cache[node_count]
    xyz_parts, w_parts = [], []
    for code, a, b, v in ORBITS[node_count]:
        pts = _orbit_points(code, a, b)
        assert pts.shape[0] == _ORBIT_SIZES[code]
        xyz_parts.append(pts)
        w_parts.append(np.full(pts.shape[0], v * 4.0 * np.pi))
    xyz = np.vstack(xyz_parts)
    weights = np.concatenate(w_parts)
    theta, phi = charts.angles_from_unit(xyz, charts.ChartId.A)
    g = LebedevGrid(node_count, PRECISION[node_count], xyz, theta, phi, weights)
    _cache[node_count] = g
    return g


def inner_product_Q(u, v, grid: LebedevGrid) -> float:
    """Discrete inner product: sum of w_l u(x_l) v(x_l)."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    if u.shape[0] != grid.node_count or v.shape[0] != grid.node_count:
        raise ValueError(
            f"sample length mismatch: got {u.shape[0]} and {v.shape[0]} "
            f"for a {grid.node_count}-node grid"
        )
    return float(np.sum(grid.weights * u * v))


def surface_integral(f, grid: LebedevGrid, geometry) -> float:
    """Integral of f over the manifold, using the area density of geometry."""
    f = np.asarray(f, dtype=float)
    if f.shape[0] != grid.node_count:
        raise ValueError(f"sample length {f.shape[0]} != node count {grid.node_count}")
    same = geometry.grid is grid or (
        geometry.grid.node_count == grid.node_count
        and np.array_equal(geometry.grid.xyz, grid.xyz)
    )
    if not same:
        raise ValueError("geometry was built on a different grid")
    return float(np.sum(grid.weights * f * geometry.area_ratio))


def dump_csv(grid: LebedevGrid, path) -> None:
    """Write the grid as CSV with columns x,y,z,theta,phi,weight."""
    with open(path, "w") as f:
        f.write(csv_body(grid))


def csv_body(grid: LebedevGrid) -> str:
    out = io.StringIO()
    out.write("x,y,z,theta,phi,weight\n")
    for l in range(grid.node_count):
        x, y, z = grid.xyz[l]
        out.write(
            f"{x:.15g},{y:.15g},{z:.15g},"
            f"{grid.theta[l]:.15g},{grid.phi[l]:.15g},{grid.weights[l]:.15g}\n"
        )
    return out.getvalue()


def fingerprint(grid: LebedevGrid) -> str:
    """Digest of the canonical CSV body; ties golden data to exact node sets."""
    return hashlib.sha256(csv_body(grid).encode()).hexdigest()[:16]


def load_csv(path) -> LebedevGrid:
    """Read a grid dumped by dump_csv (node count inferred, precision looked up)."""
    data = np.loadtxt(path, delimiter=",", skiprows=1)
    n = data.shape[0]
    if n not in PRECISION:
        raise UnsupportedGridError(f"CSV holds {n} nodes, not a supported count")
    return LebedevGrid(n, PRECISION[n], data[:, 0:3], data[:, 3], data[:, 4], data[:, 5])
