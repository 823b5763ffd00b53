"""Closed-form reference geometry and exact test fields for convergence checks.

Everything here is written in chart-A angles but in pole-safe reduced form:
the only angular divisions are by the reduced metric determinant, which is
bounded below, so the expressions are valid at every node including the
poles (where they evaluate the directional limit along the node's stored
azimuth).  Independent of the spectral geometry path by construction.
"""

from __future__ import annotations

import numpy as np

from . import charts
from .lebedev import LebedevGrid


def _trig_jet(preset: str, r0: float, theta, phi) -> dict:
    """Reduced radial jet: r, r_phi, q = r_theta/sin(phi) and their derivatives."""
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    st, ct = np.sin(theta), np.cos(theta)
    sp, cp = np.sin(phi), np.cos(phi)
    one = np.ones_like(sp)
    zero = np.zeros_like(sp)
    if preset == "sphere" or r0 == 0.0:
        return {"theta": theta, "phi": phi, "r": one, "rp": zero, "rpp": zero,
                "q": zero, "qt": zero, "qp": zero, "rtp": zero}
    if preset == "dimple":
        k = 3
        ratio = 3.0 - 4.0 * sp * sp            # sin(3 phi) / sin(phi)
        dratio = -8.0 * sp * cp
    elif preset == "fountain":
        k = 7
        ratio = 64.0 * cp**6 - 80.0 * cp**4 + 24.0 * cp**2 - 1.0  # sin(7 phi)/sin(phi)
        dratio = (-384.0 * cp**5 + 320.0 * cp**3 - 48.0 * cp) * sp
    else:
        raise ValueError(f"unknown preset {preset!r}")
    skp, ckp = np.sin(k * phi), np.cos(k * phi)
    return {
        "theta": theta, "phi": phi,
        "r": 1.0 + r0 * skp * ct,
        "rp": k * r0 * ckp * ct,
        "rpp": -k * k * r0 * skp * ct,
        "q": -r0 * st * ratio,            # r_theta / sin(phi)
        "qt": -r0 * ct * ratio,           # r_theta_theta / sin(phi)
        "qp": -r0 * st * dratio,          # d/dphi of q
        "rtp": -k * r0 * ckp * st,
    }


def _frame_bundle(jet: dict) -> dict:
    """Reduced frame quantities built on the jet (chart-A, pole-safe)."""
    theta, phi = jet["theta"], jet["phi"]
    st, ct = np.sin(theta), np.cos(theta)
    sp, cp = np.sin(phi), np.cos(phi)
    r, rp, q = jet["r"], jet["rp"], jet["q"]
    rhat = np.stack([sp * ct, sp * st, cp], axis=-1)
    east = np.stack([-st, ct, np.zeros_like(st)], axis=-1)   # rhat_theta / sin(phi)
    rhat_p = np.stack([cp * ct, cp * st, -sp], axis=-1)
    sigma_t_red = q[..., None] * rhat + r[..., None] * east  # sigma_theta / sin(phi)
    sigma_p = rp[..., None] * rhat + r[..., None] * rhat_p
    g_pp = rp * rp + r * r
    gt_tp = q * rp                        # g_theta_phi / sin(phi)
    gt_tt = q * q + r * r                 # g_theta_theta / sin^2(phi)
    gdet = r * r * (q * q + rp * rp + r * r)   # |g| / sin^2(phi)
    sqrt_gdet = np.sqrt(gdet)
    normal = np.cross(sigma_p, sigma_t_red) / sqrt_gdet[..., None]  # outward
    x = r[..., None] * rhat
    return {
        "x": x, "z": x[..., 2], "y": x[..., 1],
        "rhat": rhat, "sigma_t_red": sigma_t_red, "sigma_p": sigma_p,
        "g_pp": g_pp, "gt_tp": gt_tp, "gt_tt": gt_tt,
        "gdet": gdet, "sqrt_gdet": sqrt_gdet, "normal": normal,
        "sp": sp, "cp": cp,
    }


def exact_bundle(preset: str, r0: float, theta, phi) -> dict:
    jet = _trig_jet(preset, r0, theta, phi)
    bundle = _frame_bundle(jet)
    bundle["jet"] = jet
    return bundle


def area_ratio_exact(preset: str, r0: float, theta, phi) -> np.ndarray:
    """Exact area density relative to solid angle, sqrt|g| / sin(phi)."""
    return exact_bundle(preset, r0, theta, phi)["sqrt_gdet"]


def chart_sqrt_g(bundle: dict, xyz) -> np.ndarray:
    """Exact metric factor in each node's selected chart."""
    chart = charts.chart_select(xyz)
    _, phi_chart = charts.angles_from_unit(xyz, chart)
    return bundle["sqrt_gdet"] * np.sin(phi_chart)


def star0_fields(preset: str, r0: float, grid: LebedevGrid):
    """0-form f = exp(z)/(3 - y) and the exact chart coefficient of star f."""
    b = exact_bundle(preset, r0, grid.theta, grid.phi)
    f = np.exp(b["z"]) / (3.0 - b["y"])
    w_exact = f * chart_sqrt_g(b, grid.xyz)
    return f, w_exact


def star1_fields(preset: str, r0: float, grid: LebedevGrid):
    """1-form sqrt|g| e^z (dtheta + dphi): input sharp and exact star sharp."""
    b = exact_bundle(preset, r0, grid.theta, grid.phi)
    ez = np.exp(b["z"])
    coef_t = b["g_pp"] - b["sp"] * b["gt_tp"]
    coef_p = b["sp"] * b["gt_tt"] - b["gt_tp"]
    v = (ez / b["sqrt_gdet"])[..., None] * (
        coef_t[..., None] * b["sigma_t_red"] + coef_p[..., None] * b["sigma_p"]
    )
    v_star = np.cross(v, b["normal"])
    return v, v_star


def d0_fields(preset: str, r0: float, grid: LebedevGrid):
    """0-form f = exp(z): samples and the exact sharp of df."""
    b = exact_bundle(preset, r0, grid.theta, grid.phi)
    jet = b["jet"]
    ez = np.exp(b["z"])
    zt_red = jet["q"] * b["cp"]                       # z_theta / sin(phi)
    z_p = jet["rp"] * b["cp"] - jet["r"] * b["sp"]
    coef_t = b["g_pp"] * zt_red - b["gt_tp"] * z_p
    coef_p = b["gt_tt"] * z_p - b["gt_tp"] * zt_red
    v = (ez / b["gdet"])[..., None] * (
        coef_t[..., None] * b["sigma_t_red"] + coef_p[..., None] * b["sigma_p"]
    )
    return ez, v


def d1_fields(preset: str, r0: float, grid: LebedevGrid):
    """1-form |g| e^z (dtheta + dphi): input sharp and exact dual scalar of its d."""
    b = exact_bundle(preset, r0, grid.theta, grid.phi)
    jet = b["jet"]
    r, rp, q = jet["r"], jet["rp"], jet["q"]
    qt, qp, rtp, rpp = jet["qt"], jet["qp"], jet["rtp"], jet["rpp"]
    sp, cp = b["sp"], b["cp"]
    ez = np.exp(b["z"])
    v = (ez * sp)[..., None] * (
        (b["g_pp"] - sp * b["gt_tp"])[..., None] * b["sigma_t_red"]
        + (sp * b["gt_tt"] - b["gt_tp"])[..., None] * b["sigma_p"]
    )
    # gdet = r^2 (q^2 + rp^2 + r^2); chart derivatives, with r_theta = q sin(phi)
    r_t = q * sp
    inner = q * q + rp * rp + r * r
    dgdet_dt = 2.0 * r * r_t * inner + r * r * (2.0 * q * qt + 2.0 * rp * rtp + 2.0 * r * r_t)
    dgdet_dp = 2.0 * r * rp * inner + r * r * (2.0 * q * qp + 2.0 * rp * rpp + 2.0 * r * rp)
    z_t = r_t * cp
    z_p = rp * cp - r * sp
    s = ez * (
        sp * dgdet_dt + sp * b["gdet"] * z_t
        - 2.0 * cp * b["gdet"] - sp * dgdet_dp - sp * b["gdet"] * z_p
    ) / b["sqrt_gdet"]
    return v, s


def lb_solution_sphere(grid: LebedevGrid):
    """Manufactured Poisson data on the unit sphere: u = exp(y)/(3-z)^4 and
    g = -Laplacian(u), via the ambient-derivative formula."""
    x, y, z = grid.xyz[:, 0], grid.xyz[:, 1], grid.xyz[:, 2]
    F = np.exp(y) / (3.0 - z) ** 4
    inv = 1.0 / (3.0 - z)
    lap = F * (1.0 + 20.0 * inv * inv
               - (y * y + 8.0 * y * z * inv + 20.0 * z * z * inv * inv)
               - 2.0 * (y + 4.0 * z * inv))
    return F, -lap
