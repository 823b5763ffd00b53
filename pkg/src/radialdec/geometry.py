"""Radial-manifold geometry: charts, tangent frames, fundamental forms, curvature.

Every Lebedev node gets a frame computed in whichever chart keeps it away
from coordinate singularities.  The radial function is a spectral field;
its first and second chart derivatives come from the hyperinterpolant, so
band-limited shapes are represented exactly.

Orientation: both charts order coordinates (theta, phi), for which the
coordinate cross product sigma_theta x sigma_phi points inward on a sphere.
The stored normal is the outward one; the chart orientation itself (used by
the Hodge star) is kept as the charts define it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import charts, sphharm
from .charts import ChartId, chart_select
from .errors import DegenerateFrameError, NotRadialError
from .hyperinterp import ProjectionOperator, SpectralField
from .lebedev import LebedevGrid

PRESETS = ("sphere", "dimple", "fountain")


def preset_radius(preset: str, r0: float, xyz) -> np.ndarray:
    """Closed-form radial functions of the named shapes, as polynomials on
    the sphere (pole-safe; exactly band-limited of degree 3 or 7)."""
    xyz = np.asarray(xyz, dtype=float)
    x, z = xyz[..., 0], xyz[..., 2]
    if preset == "sphere":
        return np.ones_like(x)
    if preset == "dimple":
        # sin(3 phi) cos(theta) on the unit sphere
        return 1.0 + r0 * x * (4.0 * z * z - 1.0)
    if preset == "fountain":
        # sin(7 phi) cos(theta)
        u6 = 64.0 * z**6 - 80.0 * z**4 + 24.0 * z * z - 1.0
        return 1.0 + r0 * x * u6
    raise ValueError(f"unknown preset {preset!r}; expected one of {PRESETS}")


@dataclass
class RadialShape:
    field: SpectralField
    preset: str | None = None
    r0: float = 0.0

    @classmethod
    def from_preset(cls, preset: str, r0: float, op: ProjectionOperator) -> "RadialShape":
        samples = preset_radius(preset, r0, op.grid.xyz)
        if np.any(samples <= 0.0):
            raise NotRadialError(f"{preset} with r0={r0} is not radial")
        return cls(op.project(samples), preset=preset, r0=r0)


@dataclass
class NodeFrame:
    """Single-node view of the geometry arrays."""

    chart: ChartId
    theta: float
    phi: float
    x: np.ndarray
    sigma_theta: np.ndarray
    sigma_phi: np.ndarray
    sigma_tt: np.ndarray
    sigma_tp: np.ndarray
    sigma_pp: np.ndarray
    normal: np.ndarray
    I: np.ndarray
    II: np.ndarray
    sqrt_g: float
    dI_dtheta: np.ndarray
    dI_dphi: np.ndarray
    W: np.ndarray
    K: float

    @property
    def A(self) -> np.ndarray:
        """3x2 frame matrix with columns sigma_theta, sigma_phi."""
        return np.stack([self.sigma_theta, self.sigma_phi], axis=-1)

    @property
    def dA_dtheta(self) -> np.ndarray:
        return np.stack([self.sigma_tt, self.sigma_tp], axis=-1)

    @property
    def dA_dphi(self) -> np.ndarray:
        return np.stack([self.sigma_tp, self.sigma_pp], axis=-1)


def _assemble_frames(rjet: dict, radjet: dict, phi: np.ndarray) -> dict:
    """Frame quantities from the scalar r-jet and the unit radial-vector jet."""
    r, rt, rp = rjet["r"][:, None], rjet["rt"][:, None], rjet["rp"][:, None]
    rtt, rtp, rpp = rjet["rtt"][:, None], rjet["rtp"][:, None], rjet["rpp"][:, None]
    e, et, ep = radjet["r"], radjet["rt"], radjet["rp"]
    ett, etp, epp = radjet["rtt"], radjet["rtp"], radjet["rpp"]

    x = r * e
    st = rt * e + r * et
    sp = rp * e + r * ep
    stt = rtt * e + 2.0 * rt * et + r * ett
    stp = rtp * e + rt * ep + rp * et + r * etp
    spp = rpp * e + 2.0 * rp * ep + r * epp

    def dot(a, b):
        return np.sum(a * b, axis=-1)

    g_tt, g_tp, g_pp = dot(st, st), dot(st, sp), dot(sp, sp)
    I = np.stack(
        [np.stack([g_tt, g_tp], axis=-1), np.stack([g_tp, g_pp], axis=-1)], axis=-2
    )
    cross = np.cross(st, sp)
    sqrt_g = np.linalg.norm(cross, axis=-1)
    # The (theta, phi) coordinate frame is left-handed w.r.t. the outward
    # direction on these charts: sigma_t x sigma_p points inward.  The stored
    # normal is outward; the shape tensor keeps the chart-orientation normal
    # so curvature signs follow the chart conventions.
    chart_normal = cross / sqrt_g[:, None]
    normal = -chart_normal
    II = np.stack(
        [
            np.stack([dot(stt, chart_normal), dot(stp, chart_normal)], axis=-1),
            np.stack([dot(stp, chart_normal), dot(spp, chart_normal)], axis=-1),
        ],
        axis=-2,
    )
    # analytic derivatives of the closed-form metric entries
    r1, rt1, rp1 = rjet["r"], rjet["rt"], rjet["rp"]
    rtt1, rtp1, rpp1 = rjet["rtt"], rjet["rtp"], rjet["rpp"]
    sp_, cp_ = np.sin(phi), np.cos(phi)
    s2 = sp_ * sp_
    dgtt_dt = 2.0 * rt1 * rtt1 + 2.0 * r1 * rt1 * s2
    dgtt_dp = 2.0 * rt1 * rtp1 + 2.0 * r1 * rp1 * s2 + 2.0 * r1 * r1 * sp_ * cp_
    dgtp_dt = rtt1 * rp1 + rt1 * rtp1
    dgtp_dp = rtp1 * rp1 + rt1 * rpp1
    dgpp_dt = 2.0 * rp1 * rtp1 + 2.0 * r1 * rt1
    dgpp_dp = 2.0 * rp1 * rpp1 + 2.0 * r1 * rp1
    dI_dt = np.stack(
        [np.stack([dgtt_dt, dgtp_dt], axis=-1), np.stack([dgtp_dt, dgpp_dt], axis=-1)],
        axis=-2,
    )
    dI_dp = np.stack(
        [np.stack([dgtt_dp, dgtp_dp], axis=-1), np.stack([dgtp_dp, dgpp_dp], axis=-1)],
        axis=-2,
    )
    W = -np.linalg.solve(I, II)
    K = np.linalg.det(W)
    return {
        "x": x, "sigma_theta": st, "sigma_phi": sp,
        "sigma_tt": stt, "sigma_tp": stp, "sigma_pp": spp,
        "normal": normal, "I": I, "II": II, "sqrt_g": sqrt_g,
        "dI_dtheta": dI_dt, "dI_dphi": dI_dp, "W": W, "K": K,
    }


class ManifoldGeometry:
    """Per-node frames of a radial manifold over a Lebedev grid."""

    def __init__(self, shape: RadialShape, grid: LebedevGrid, op: ProjectionOperator,
                 arrays: dict, chart: np.ndarray, theta: np.ndarray, phi: np.ndarray):
        self.shape = shape
        self.grid = grid
        self.op = op
        self.chart = chart
        self.theta = theta
        self.phi = phi
        for k, v in arrays.items():
            setattr(self, k, v)
        self.A = np.stack([self.sigma_theta, self.sigma_phi], axis=-1)
        self.dA_dtheta = np.stack([self.sigma_tt, self.sigma_tp], axis=-1)
        self.dA_dphi = np.stack([self.sigma_tp, self.sigma_pp], axis=-1)

    @property
    def node_count(self) -> int:
        return self.grid.node_count

    @property
    def area_ratio(self) -> np.ndarray:
        """Area density relative to solid angle: sqrt|g| / sin(chart phi)."""
        return self.sqrt_g / np.sin(self.phi)

    def frame(self, l: int) -> NodeFrame:
        return NodeFrame(
            chart=ChartId(int(self.chart[l])), theta=float(self.theta[l]),
            phi=float(self.phi[l]), x=self.x[l],
            sigma_theta=self.sigma_theta[l], sigma_phi=self.sigma_phi[l],
            sigma_tt=self.sigma_tt[l], sigma_tp=self.sigma_tp[l],
            sigma_pp=self.sigma_pp[l], normal=self.normal[l],
            I=self.I[l], II=self.II[l], sqrt_g=float(self.sqrt_g[l]),
            dI_dtheta=self.dI_dtheta[l], dI_dphi=self.dI_dphi[l],
            W=self.W[l], K=float(self.K[l]),
        )

    def tangent_project(self, v: np.ndarray) -> np.ndarray:
        """Remove the normal component at every node."""
        v = np.asarray(v, dtype=float)
        return v - self.normal * np.sum(self.normal * v, axis=-1, keepdims=True)

    def chart_components(self, v: np.ndarray, cond_limit: float = 1.0e12) -> np.ndarray:
        """Contravariant chart components of (projected) embedding vectors.

        Solves the 2x2 normal system I c = A^T v at every node; raises if the
        metric conditioning exceeds cond_limit.
        """
        v = np.asarray(v, dtype=float)
        _check_conditioning(self.I, cond_limit)
        rhs = np.einsum("lik,li->lk", self.A, self.tangent_project(v))
        return np.linalg.solve(self.I, rhs[..., None])[..., 0]


def _check_conditioning(I: np.ndarray, cond_limit: float) -> None:
    tr = I[..., 0, 0] + I[..., 1, 1]
    det = I[..., 0, 0] * I[..., 1, 1] - I[..., 0, 1] * I[..., 1, 0]
    disc = np.sqrt(np.maximum(tr * tr - 4.0 * det, 0.0))
    lam_max = 0.5 * (tr + disc)
    lam_min = 0.5 * (tr - disc)
    with np.errstate(divide="ignore", invalid="ignore"):
        cond = np.where(lam_min > 0, lam_max / lam_min, np.inf)
    if np.any(cond > cond_limit):
        worst = float(np.max(cond))
        raise DegenerateFrameError(
            f"metric condition number {worst:.3e} exceeds {cond_limit:.1e}"
        )


def _radial_jet_at(shape: RadialShape, op: ProjectionOperator, theta, phi, chart) -> dict:
    field = shape.field
    if field.max_degree < op.max_degree:
        padded = np.zeros(sphharm.basis_size(op.max_degree))
        padded[: field.coeffs.shape[0]] = field.coeffs
        field = SpectralField(op.max_degree, padded)
    r, rt, rp = op.evaluate_grad(field, theta, phi, chart)
    rtt, rtp, rpp = op.evaluate_hess(field, theta, phi, chart)
    return {"r": r, "rt": rt, "rp": rp, "rtt": rtt, "rtp": rtp, "rpp": rpp}


def frames_at(shape: RadialShape, op: ProjectionOperator, theta, phi, chart) -> dict:
    """Frame quantities at arbitrary chart coordinates (one chart at a time)."""
    theta = np.atleast_1d(np.asarray(theta, dtype=float))
    phi = np.atleast_1d(np.asarray(phi, dtype=float))
    rjet = _radial_jet_at(shape, op, theta, phi, chart)
    radjet = charts.radial_jet(theta, phi, chart)
    return _assemble_frames(rjet, radjet, phi)


def build(shape: RadialShape, grid: LebedevGrid,
          op: ProjectionOperator | None = None) -> ManifoldGeometry:
    """Compute every node frame in its selected chart."""
    if op is None:
        op = ProjectionOperator(grid)
    if op.grid is not grid:
        raise ValueError("projection operator belongs to a different grid")
    if shape.field.max_degree > op.max_degree:
        raise ValueError(
            f"shape degree {shape.field.max_degree} exceeds grid band limit "
            f"{op.max_degree}"
        )
    chart = chart_select(grid.xyz)
    L = grid.node_count
    theta = np.empty(L)
    phi = np.empty(L)
    arrays: dict[str, np.ndarray] = {}
    for cid in (ChartId.A, ChartId.B):
        mask = chart == int(cid)
        if not np.any(mask):
            continue
        t, p = charts.angles_from_unit(grid.xyz[mask], cid)
        theta[mask] = t
        phi[mask] = p
        rjet = _radial_jet_at(shape, op, t, p, cid)
        if np.any(rjet["r"] <= 0.0):
            raise NotRadialError("radial function is not positive at every node")
        radjet = charts.radial_jet(t, p, cid)
        part = _assemble_frames(rjet, radjet, p)
        for k, v in part.items():
            if k not in arrays:
                arrays[k] = np.empty((L,) + v.shape[1:])
            arrays[k][mask] = v
    return ManifoldGeometry(shape, grid, op, arrays, chart, theta, phi)


def invert_frame(frame: NodeFrame, v, cond_limit: float = 1.0e12) -> np.ndarray:
    """Chart components of a single embedding vector at one node."""
    v = np.asarray(v, dtype=float)
    _check_conditioning(frame.I[None], cond_limit)
    v_t = v - frame.normal * float(np.dot(frame.normal, v))
    return np.linalg.solve(frame.I, frame.A.T @ v_t)
