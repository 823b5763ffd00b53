"""Coordinate charts on the unit sphere.

Two spherical-coordinate charts cover the sphere.  Chart A is the standard
parameterization with coordinate singularities on the z axis; chart B is
chart A composed with a rigid rotation and is singular on the x axis.
Both use an azimuth theta and a polar angle phi in [0, pi].
"""

from __future__ import annotations

import enum

import numpy as np

# Polar-angle band each chart is trusted in.
PHI_MIN = 0.8 * np.pi / 4.0
PHI_MAX = 0.8 * np.pi

# Chart B parameterizes u = ROT_B @ s(theta, phi) with s the chart-A map.
# ROT_B is the proper rotation (x, y, z) -> (z, y, -x).
ROT_B = np.array([[0.0, 0.0, 1.0], [0.0, 1.0, 0.0], [-1.0, 0.0, 0.0]])


class ChartId(enum.IntEnum):
    A = 0
    B = 1


def chart_rotation(chart: ChartId) -> np.ndarray:
    return np.eye(3) if chart == ChartId.A else ROT_B


def chart_select(u) -> np.ndarray:
    """Pick the chart whose polar caps exclude the unit vector(s) u.

    Chart A is used where |u.z| <= cos(PHI_MIN), chart B otherwise.  The two
    exclusion caps cannot both contain a point for this band choice.
    """
    u = np.asarray(u, dtype=float)
    z = u[..., 2]
    return np.where(np.abs(z) <= np.cos(PHI_MIN), int(ChartId.A), int(ChartId.B)).astype(np.int8)


def angles_from_unit(u, chart) -> tuple[np.ndarray, np.ndarray]:
    """Chart coordinates (theta, phi) of unit vectors, theta in [0, 2*pi)."""
    u = np.asarray(u, dtype=float)
    chart = np.asarray(chart)
    x, y, z = u[..., 0], u[..., 1], u[..., 2]
    is_b = chart == int(ChartId.B)
    # chart A: u = (sin p cos t, sin p sin t, cos p)
    # chart B: u = (cos p, sin p sin t, -sin p cos t)
    cosp = np.where(is_b, x, z)
    theta = np.where(is_b, np.arctan2(y, -z), np.arctan2(y, x))
    phi = np.arccos(np.clip(cosp, -1.0, 1.0))
    theta = np.mod(theta, 2.0 * np.pi)
    return theta, phi


def unit_from_angles(theta, phi, chart) -> np.ndarray:
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    s = np.stack(
        [np.sin(phi) * np.cos(theta), np.sin(phi) * np.sin(theta), np.cos(phi)], axis=-1
    )
    chart = np.asarray(chart)
    if chart.ndim == 0:
        return s if int(chart) == int(ChartId.A) else s @ ROT_B.T
    out = np.where((chart == int(ChartId.B))[..., None], s @ ROT_B.T, s)
    return out


def radial_jet(theta, phi, chart):
    """Unit radial vector of the chart and its first and second derivatives.

    Returns a dict with keys r, rt, rp, rtt, rtp, rpp; each value has shape
    (..., 3).  For chart B every vector is the chart-A one rotated by ROT_B.
    """
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    st, ct = np.sin(theta), np.cos(theta)
    sp, cp = np.sin(phi), np.cos(phi)
    zero = np.zeros_like(st)
    r = np.stack([sp * ct, sp * st, cp], axis=-1)
    rt = np.stack([-sp * st, sp * ct, zero], axis=-1)
    rp = np.stack([cp * ct, cp * st, -sp], axis=-1)
    rtt = np.stack([-sp * ct, -sp * st, zero], axis=-1)
    rtp = np.stack([-cp * st, cp * ct, zero], axis=-1)
    rpp = -r
    jet = {"r": r, "rt": rt, "rp": rp, "rtt": rtt, "rtp": rtp, "rpp": rpp}
    chart = np.asarray(chart)
    if chart.ndim == 0:
        if int(chart) == int(ChartId.B):
            jet = {k: v @ ROT_B.T for k, v in jet.items()}
        return jet
    mask = (chart == int(ChartId.B))[..., None]
    return {k: np.where(mask, v @ ROT_B.T, v) for k, v in jet.items()}
