"""Symbolic chart computations for the golden-data generator.

All working expressions live in chart-A spherical coordinates (azimuth
theta, polar phi) with the shape amplitude left symbolic, so one
differentiation pass serves every amplitude value.  Nodes at the exact
chart-A poles are evaluated with 60-digit arithmetic a tiny step off the
pole, which recovers the (finite) limit to full double precision.  A
chart-B pipeline built from the embedding-polynomial form of the shapes is
used to cross-validate values where both charts are regular.
"""

from __future__ import annotations

import mpmath
import numpy as np
import sympy as sp

_T, _P, _R0 = sp.symbols("theta phi r0", real=True)

POLE_STEP = sp.Rational(1, 10**20)
POLE_DPS = 60
PRESETS = ("sphere", "dimple", "fountain")


def radial_expr(preset: str):
    """Chart-A radial function of the preset, amplitude symbolic."""
    if preset == "sphere":
        return sp.Integer(1) + 0 * _R0
    if preset == "dimple":
        return 1 + _R0 * sp.sin(3 * _P) * sp.cos(_T)
    if preset == "fountain":
        return 1 + _R0 * sp.sin(7 * _P) * sp.cos(_T)
    raise ValueError(f"unknown preset {preset!r}")


def _chart_a_embedding():
    return sp.Matrix([sp.sin(_P) * sp.cos(_T), sp.sin(_P) * sp.sin(_T), sp.cos(_P)])


def _chart_b_embedding():
    return sp.Matrix([sp.cos(_P), sp.sin(_P) * sp.sin(_T), -sp.sin(_P) * sp.cos(_T)])


def radial_expr_embedding(preset: str, u: sp.Matrix):
    """Radial function written through embedding coordinates (chart-free)."""
    X, Z = u[0], u[2]
    if preset == "sphere":
        return sp.Integer(1) + 0 * _R0
    if preset == "dimple":
        return 1 + _R0 * X * (4 * Z**2 - 1)
    if preset == "fountain":
        return 1 + _R0 * X * (64 * Z**6 - 80 * Z**4 + 24 * Z**2 - 1)
    raise ValueError(f"unknown preset {preset!r}")


class ChartGeometry:
    """First fundamental form and helpers of a radial surface in one chart."""

    def __init__(self, r_expr, embedding):
        self.r = r_expr
        self.e = embedding
        self.x = r_expr * embedding
        self.sig_t = self.x.diff(_T)
        self.sig_p = self.x.diff(_P)
        self.E = self.sig_t.dot(self.sig_t)
        self.F = self.sig_t.dot(self.sig_p)
        self.G = self.sig_p.dot(self.sig_p)
        self.detg = sp.expand(self.E * self.G - self.F**2)
        self.sqrtg = sp.sqrt(self.detg)

    def sharp(self, a_t, a_p) -> sp.Matrix:
        """Tangent vector of the 1-form a_t dtheta + a_p dphi."""
        vt = (self.G * a_t - self.F * a_p) / self.detg
        vp = (self.E * a_p - self.F * a_t) / self.detg
        return vt * self.sig_t + vp * self.sig_p

    def laplacian(self, f):
        """Laplace-Beltrami of a scalar: divergence form in chart coordinates."""
        ft, fp = f.diff(_T), f.diff(_P)
        flux_t = self.sqrtg * (self.G * ft - self.F * fp) / self.detg
        flux_p = self.sqrtg * (self.E * fp - self.F * ft) / self.detg
        return (flux_t.diff(_T) + flux_p.diff(_P)) / self.sqrtg


def chart_a_geometry(preset: str) -> ChartGeometry:
    return ChartGeometry(radial_expr(preset), _chart_a_embedding())


def chart_b_geometry(preset: str) -> ChartGeometry:
    u = _chart_b_embedding()
    return ChartGeometry(radial_expr_embedding(preset, u), u)


def case_expressions(case: str, geom: ChartGeometry) -> dict:
    """Symbolic golden quantities for one case in the geometry's chart."""
    x, y, z = geom.x[0], geom.x[1], geom.x[2]
    if case == "exp-poly":
        u = sp.exp(y) / (3 - z) ** 4
        return {"u": u, "g": -geom.laplacian(u)}
    if case == "d0-exp":
        f = sp.exp(z)
        v = geom.sharp(f.diff(_T), f.diff(_P))
        return {"input_scalar": f, "exact_sharp": v}
    if case == "d1-gexp":
        a = geom.detg * sp.exp(z)
        v = geom.sharp(a, a)
        dual = (a.diff(_T) - a.diff(_P)) / geom.sqrtg
        return {"input_sharp": v, "exact_dual": dual}
    raise ValueError(f"unknown case {case!r}")


def _lambdify(expr):
    return sp.lambdify((_T, _P, _R0), expr, "numpy", cse=True)


class CaseEvaluator:
    """Numeric evaluation of one case's chart-A expressions at grid nodes."""

    def __init__(self, case: str, preset: str):
        self.case = case
        self.preset = preset
        self.exprs = case_expressions(case, chart_a_geometry(preset))
        self._funcs = {
            k: ([_lambdify(c) for c in v] if isinstance(v, sp.Matrix) else _lambdify(v))
            for k, v in self.exprs.items()
        }

    def _eval_pole(self, expr, theta0: float, north: bool, r0: float):
        phi = POLE_STEP if north else sp.pi - POLE_STEP
        sub = expr.subs(
            {_T: sp.Float(theta0, POLE_DPS), _P: phi, _R0: sp.Float(r0, POLE_DPS)}
        )
        with mpmath.workdps(POLE_DPS):
            return float(sp.N(sub, POLE_DPS))

    def evaluate(self, theta: np.ndarray, phi: np.ndarray, r0: float) -> dict:
        """Values at chart-A node angles; exact-pole nodes get the limit."""
        theta = np.asarray(theta, dtype=float)
        phi = np.asarray(phi, dtype=float)
        interior = (phi > 1e-12) & (phi < np.pi - 1e-12)
        out = {}
        for key, fn in self._funcs.items():
            expr = self.exprs[key]
            if isinstance(expr, sp.Matrix):
                vals = np.empty((len(theta), 3))
                for c in range(3):
                    vals[interior, c] = fn[c](theta[interior], phi[interior], r0)
                for l in np.nonzero(~interior)[0]:
                    for c in range(3):
                        vals[l, c] = self._eval_pole(expr[c], theta[l], phi[l] < 1.0, r0)
            else:
                vals = np.empty(len(theta))
                vals[interior] = fn(theta[interior], phi[interior], r0)
                for l in np.nonzero(~interior)[0]:
                    vals[l] = self._eval_pole(expr, theta[l], phi[l] < 1.0, r0)
            out[key] = vals
        return out


def chart_b_case_values(case: str, preset: str, theta_b, phi_b, r0: float) -> dict:
    """Chart-B evaluation for cross-validation (smooth cases only)."""
    geomB = chart_b_geometry(preset)
    if case == "d1-gexp":
        # the form is defined through chart-A differentials: pull its covariant
        # components through the transition map (regular off both pole pairs)
        uB = _chart_b_embedding()
        thA = sp.atan2(uB[1], uB[0])
        phA = sp.acos(uB[2])
        geomA = chart_a_geometry(preset)
        a_of_A = geomA.detg * sp.exp(geomA.x[2])
        aB = a_of_A.subs({_T: thA, _P: phA}, simultaneous=True)
        a_t = aB * (thA.diff(_T) + phA.diff(_T))
        a_p = aB * (thA.diff(_P) + phA.diff(_P))
        dual_expr = (a_p.diff(_T) - a_t.diff(_P)) / geomB.sqrtg
        out = {"exact_dual": _lambdify(dual_expr)(theta_b, phi_b, r0)}
        out["input_sharp"] = np.stack(
            [_lambdify(c)(theta_b, phi_b, r0) for c in geomB.sharp(a_t, a_p)], axis=-1
        )
        return out
    exprs = case_expressions(case, geomB)
    out = {}
    for k, v in exprs.items():
        if isinstance(v, sp.Matrix):
            out[k] = np.stack([_lambdify(c)(theta_b, phi_b, r0) for c in v], axis=-1)
        else:
            out[k] = _lambdify(v)(theta_b, phi_b, r0)
    return out
