"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s`.  Tolerances are pinned
from the criteria themselves; DERIVED values are frozen from the first
converged run and marked below.
"""

import warnings

import numpy as np
import pytest

from radialdec import excalc as xc, forms, lebedev, pde, sphharm as sh
from radialdec.cli import build_context, d_errors, lb_error, star_errors
from radialdec.forms import FormField

SWEEP_NODES = (110, 194, 302, 434, 590)
DIMPLE_R0S = (0.1, 0.2, 0.3, 0.4)

# DERIVED: first converged run of the dimple r0=0.4 manufactured solve at 590
# nodes (regression pin; the criterion allows no drift beyond this value).
LB_DIMPLE_590_PIN = 0.00023964033635009535


def _report(name: str, ok: bool, detail: str = "") -> None:
    line = f"ACCEPTANCE {'PASS' if ok else 'FAIL'}: {name}"
    if detail:
        line += f"  [{detail}]"
    print(line)
    assert ok, line


def test_basis_orthonormality_every_grid():
    worst = 0.0
    for count in lebedev.supported_counts():
        g = lebedev.grid(count)
        B = sh.eval_basis(g.max_degree, g.theta, g.phi)
        norms = np.sqrt(np.sum(g.weights[:, None] * B * B, axis=0))
        B = B / norms
        gram = B.T @ (g.weights[:, None] * B)
        worst = max(worst, float(np.abs(gram - np.eye(B.shape[1])).max()))
    _report("basis orthonormality on every supported grid <= 1e-12", worst <= 1e-12,
            f"max deviation {worst:.3e}")


def test_quadrature_exactness_degree_29():
    g = lebedev.grid(302)
    x, y, z = g.xyz.T

    def dfact(k):
        return 1.0 if k <= 0 else float(np.prod(np.arange(k, 0, -2, dtype=float)))

    worst = 0.0
    for a in range(0, 30):
        xa = x**a
        for b in range(0, 30 - a):
            xab = xa * y**b
            for c in range(0, 30 - a - b):
                q = float(np.sum(g.weights * xab * z**c))
                exact = 0.0
                if a % 2 == 0 and b % 2 == 0 and c % 2 == 0:
                    exact = 4 * np.pi * dfact(a - 1) * dfact(b - 1) * dfact(c - 1) \
                        / dfact(a + b + c + 1)
                worst = max(worst, abs(q - exact))
    # products of basis functions up to the band limit (degree sums <= 28)
    B = sh.eval_basis(g.max_degree, g.theta, g.phi)
    gram = B.T @ (g.weights[:, None] * B)
    worst = max(worst, float(np.abs(gram - np.eye(B.shape[1])).max()))
    _report("grid(302) integrates the degree-<=29 test set exactly to 1e-12",
            worst <= 1e-12, f"max deviation {worst:.3e}")


def test_geometry_sphere_and_gauss_bonnet():
    worst = 0.0
    for n in (110, 194):
        M = build_context("sphere", 0.0, n).geometry
        worst = max(
            worst,
            float(np.abs(M.sqrt_g - np.sin(M.phi)).max()),
            float(np.abs(M.K - 1.0).max()),
            float(np.abs(M.normal - M.x).max()),
        )
    ok_sphere = worst <= 1e-12
    details = [f"sphere closed forms max dev {worst:.3e}"]

    ok_gb = True
    for preset in ("dimple", "fountain"):
        for n, tol in ((302, 1e-4), (974, 1e-8)):
            ctx = build_context(preset, 0.4, n)
            total = lebedev.surface_integral(ctx.geometry.K, ctx.grid, ctx.geometry)
            dev = abs(total - 4 * np.pi)
            details.append(f"{preset}@{n}: |int K dA - 4pi| = {dev:.3e} (tol {tol:g})")
            ok_gb = ok_gb and dev <= tol
    _report("geometry: sphere closed forms <= 1e-12; Gauss-Bonnet 1e-4@302 / "
            "1e-8@974 for dimple and fountain at r0=0.4",
            ok_sphere and ok_gb, "; ".join(details))


def _random_band_limited_tangent(ctx_obj, rng, max_degree=7):
    op, M = ctx_obj.projector, ctx_obj.geometry
    n_of, _ = sh.degrees_orders(op.max_degree)
    sel = (n_of >= 1) & (n_of <= max_degree)
    ca = np.zeros(op.n_modes)
    cb = np.zeros(op.n_modes)
    ca[sel] = rng.standard_normal(sel.sum())
    cb[sel] = rng.standard_normal(sel.sum())
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", forms.TangencyWarning)
        rot = xc.hodge_star(ctx_obj, forms.flat(M, xc.grad(ctx_obj, op.basis @ cb)))
    return xc.grad(ctx_obj, op.basis @ ca) + rot.values


def test_operator_identities_at_precision_29(rng):
    details = []
    # star-star sign law
    ok = True
    for preset, r0, tol in (("sphere", 0.0, 1e-12), ("dimple", 0.4, 1e-6)):
        c = build_context(preset, r0, 302)
        v = _random_band_limited_tangent(c, rng)
        twice = xc.hodge_star(c, xc.hodge_star(c, FormField(1, c.grid, v)))
        dev = float(np.abs(twice.values + v).max() / np.abs(v).max())
        f = rng.standard_normal(c.grid.node_count)
        dev0 = float(np.abs(
            xc.hodge_star(c, xc.hodge_star(c, FormField(0, c.grid, f))).values - f
        ).max() / np.abs(f).max())
        details.append(f"star-star {preset}: {max(dev, dev0):.3e} (tol {tol:g})")
        ok = ok and max(dev, dev0) <= tol
    # d after d on the sphere for band-limited degree-<=7 scalars
    c = build_context("sphere", 0.0, 302)
    n_of, _ = sh.degrees_orders(c.projector.max_degree)
    coeffs = np.where((n_of >= 1) & (n_of <= 7), rng.standard_normal(n_of.shape), 0.0)
    f = c.projector.basis @ coeffs
    df = xc.exterior_derivative(c, FormField(0, c.grid, f))
    ddf = xc.exterior_derivative(c, df)
    w = c.grid.weights
    ratio = float(np.sqrt(np.sum(w * ddf.values**2))
                  / np.sqrt(np.sum(w * np.sum(df.values**2, axis=1))))
    details.append(f"||dd f||/||d f|| = {ratio:.3e} (tol 1e-8)")
    ok = ok and ratio <= 1e-8
    # closed-surface Stokes
    for preset, r0 in (("sphere", 0.0), ("dimple", 0.4), ("fountain", 0.4)):
        c = build_context(preset, r0, 302)
        v = _random_band_limited_tangent(c, rng)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", forms.TangencyWarning)
            omega = forms.flat(c.geometry, v)
        dw = xc.exterior_derivative(c, omega)
        total = abs(lebedev.surface_integral(dw.values, c.grid, c.geometry))
        norm = float(np.sqrt(np.sum(c.grid.weights * np.sum(v**2, axis=1))))
        details.append(f"stokes {preset}: {total / norm:.3e} (tol 1e-8)")
        ok = ok and total <= 1e-8 * norm
    _report("operator identities at precision-29 grids", ok, "; ".join(details))


def test_sphere_spectrum_and_band_limited_solve(rng):
    c = build_context("sphere", 0.0, 590)
    op = c.projector
    worst = 0.0
    for n in range(1, 9):
        for m in range(-n, n + 1):
            col = op.basis[:, sh.index_map(n, m) - 1]
            dd = xc.codifferential(
                c, xc.exterior_derivative(c, FormField(0, c.grid, col)))
            worst = max(worst, float(
                np.abs(dd.values - n * (n + 1.0) * col).max() / (n * (n + 1.0))))
    ok_spectrum = worst <= 1e-9

    system = pde.assemble(c, pde.laplace_beltrami_chain())
    n_of, _ = sh.degrees_orders(op.max_degree)
    coeffs = np.where((n_of >= 1) & (n_of <= 8), rng.standard_normal(n_of.shape), 0.0)
    g_samples = op.basis @ (n_of * (n_of + 1.0) * coeffs)
    u = pde.solve(system, g_samples)
    err = float(np.abs(u.coeffs - coeffs).max() / np.abs(coeffs).max())
    ok_solve = err <= 1e-9
    _report("sphere spectrum n<=8 at 590 <= 1e-9; band-limited solve <= 1e-9",
            ok_spectrum and ok_solve,
            f"spectrum dev {worst:.3e}; solve dev {err:.3e}")


def _decreasing_after_first_decrease(seq) -> bool:
    drops = [i for i in range(len(seq) - 1) if seq[i + 1] < seq[i]]
    if not drops:
        return False
    i = drops[0]
    return all(seq[j + 1] < seq[j] for j in range(i, len(seq) - 1))


_curve_cache: dict = {}


def _curves(family: str) -> dict:
    """rel_error sequences keyed by (preset, r0) for one operator family."""
    if family in _curve_cache:
        return _curve_cache[family]
    variants = [("dimple", 0.0)] + [("dimple", r) for r in DIMPLE_R0S] \
        + [("fountain", 0.4)]
    out = {}
    for preset, r0 in variants:
        seq = []
        for n in SWEEP_NODES:
            if family == "star0":
                seq.append(star_errors(preset, r0, n)[0])
            elif family == "star1":
                seq.append(star_errors(preset, r0, n)[1])
            elif family == "d0":
                seq.append(d_errors(preset, r0, n)[0])
            elif family == "d1":
                seq.append(d_errors(preset, r0, n)[1])
            else:
                seq.append(lb_error(preset, r0, n))
        out[(preset, r0)] = seq
    _curve_cache[family] = out
    return out


@pytest.mark.parametrize("family,label", [
    ("star0", "hodge star on 0-forms"),
    ("star1", "hodge star on 1-forms"),
    ("d0", "exterior derivative on 0-forms"),
    ("d1", "exterior derivative on 1-forms"),
    ("lb", "Laplace-Beltrami solve"),
])
def test_convergence_curve_shape(family, label):
    curves = _curves(family)
    details = []
    ok = True
    for (preset, r0), seq in curves.items():
        if r0 == 0.0:
            continue
        mono = _decreasing_after_first_decrease(seq)
        details.append(f"{preset} r0={r0}: "
                       + " ".join(f"{e:.2e}" for e in seq)
                       + ("" if mono else "  NOT MONOTONE"))
        ok = ok and mono
    base = curves[("dimple", 0.0)]
    for (preset, r0), seq in curves.items():
        if r0 == 0.0:
            continue
        below = all(b < s for b, s in zip(base, seq))
        ok = ok and below
        if not below:
            details.append(f"r0=0 curve not below {preset} r0={r0}")
    fountain = curves[("fountain", 0.4)]
    dimple = curves[("dimple", 0.4)]
    slower = all(f >= d for f, d in zip(fountain, dimple))
    ok = ok and slower
    if not slower:
        details.append("fountain error not >= dimple error")
    _report(f"convergence curves: {label}", ok, "; ".join(details))


def test_manufactured_regression_pin():
    err = lb_error("dimple", 0.4, 590)
    ok = err <= LB_DIMPLE_590_PIN * (1 + 1e-9)
    _report("manufactured Laplace-Beltrami on dimple: rel error at 590 nodes "
            "within the recorded pin", ok,
            f"err {err:.17g} pin {LB_DIMPLE_590_PIN:.17g}")


def test_secondary_crosscheck_committed_goldens():
    """[SECONDARY] every r0=0 golden case matches the analytic sphere values."""
    from radialdec import reference

    worst = 0.0
    for preset in ("dimple", "fountain"):
        for n in SWEEP_NODES:
            g = lebedev.grid(n)
            data = pde.load_golden(
                pde.golden_path(pde.golden_dir(), "exp-poly", preset, 0.0, n),
                preset, 0.0, g)
            u_ref, g_ref = reference.lb_solution_sphere(g)
            worst = max(worst, float(np.abs(np.asarray(data["u"]) - u_ref).max()))
            worst = max(worst, float(np.abs(np.asarray(data["g"]) - g_ref).max()
                                     / np.abs(g_ref).max()))
    _report("[secondary] r0=0 golden cases match analytic sphere values <= 1e-12",
            worst <= 1e-12, f"max deviation {worst:.3e}")
