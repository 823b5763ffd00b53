import warnings

import numpy as np
import pytest

from radialdec import excalc as xc, forms, lebedev, pde, sphharm as sh
from radialdec.errors import FormDegreeError
from radialdec.forms import FormField


def _random_tangent(ctx_obj, rng, max_degree=7):
    """Tangent field from band-limited potentials: grad a + star grad b."""
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


def _qnorm(grid, values):
    values = np.asarray(values)
    sq = np.sum(values**2, axis=1) if values.ndim == 2 else values**2
    return float(np.sqrt(np.sum(grid.weights * sq)))


def test_gradient_of_height_function(ctx):
    c = ctx("sphere", 0.0, 302)
    z = c.grid.xyz[:, 2]
    got = xc.grad(c, z)
    want = np.array([0.0, 0.0, 1.0]) - z[:, None] * c.grid.xyz
    assert np.abs(got - want).max() < 1e-12


def test_star_example_rotates_coframe(ctx):
    c = ctx("sphere", 0.0, 302)
    M = c.geometry
    alpha = FormField(1, c.grid, M.sigma_theta / np.sin(M.phi)[:, None])
    star = xc.hodge_star(c, alpha)
    assert np.abs(star.values - M.sigma_phi).max() < 1e-12


@pytest.mark.parametrize("preset,r0,tol", [("sphere", 0.0, 1e-12), ("dimple", 0.4, 1e-6)])
def test_star_star_sign_law(ctx, rng, preset, r0, tol):
    c = ctx(preset, r0, 302)
    v = _random_tangent(c, rng)
    alpha = FormField(1, c.grid, v)
    twice = xc.hodge_star(c, xc.hodge_star(c, alpha))
    assert np.abs(twice.values + v).max() <= tol * np.abs(v).max()
    f = rng.standard_normal(c.grid.node_count)
    back = xc.hodge_star(c, xc.hodge_star(c, FormField(0, c.grid, f)))
    assert np.array_equal(back.values, f)


def test_star_preserves_one_form_magnitude(ctx, rng):
    c = ctx("dimple", 0.4, 302)
    v = _random_tangent(c, rng)
    star = xc.hodge_star(c, FormField(1, c.grid, v))
    assert np.abs(
        np.linalg.norm(star.values, axis=1) - np.linalg.norm(v, axis=1)
    ).max() < 1e-10 * np.linalg.norm(v, axis=1).max()


@pytest.mark.parametrize("preset,r0", [("sphere", 0.0), ("dimple", 0.4), ("fountain", 0.4)])
def test_star_chart_formula_agrees_with_cross_product(ctx, rng, preset, r0):
    c = ctx(preset, r0, 302)
    v = _random_tangent(c, rng)
    alpha = FormField(1, c.grid, v)
    a = xc.hodge_star(c, alpha).values
    b = xc.hodge_star_one_form_cross(c, alpha).values
    assert np.abs(a - b).max() < 1e-12 * np.abs(v).max()


def test_d_then_d_vanishes_on_sphere(ctx):
    c = ctx("sphere", 0.0, 302)
    f = np.exp(c.grid.xyz[:, 2])
    df = xc.exterior_derivative(c, FormField(0, c.grid, f))
    ddf = xc.exterior_derivative(c, df)
    assert _qnorm(c.grid, ddf.values) <= 1e-8 * _qnorm(c.grid, df.values)


def test_d_on_two_form_is_typed_zero(ctx, rng):
    c = ctx("sphere", 0.0, 110)
    omega = FormField(2, c.grid, rng.standard_normal(c.grid.node_count))
    out = xc.exterior_derivative(c, omega)
    assert out.degree == 2 and np.abs(out.values).max() == 0.0
    # composition stays zero through further operators
    again = xc.hodge_star(c, xc.exterior_derivative(c, out))
    assert np.abs(again.values).max() == 0.0


def test_codifferential_degree_error(ctx):
    c = ctx("sphere", 0.0, 110)
    with pytest.raises(FormDegreeError):
        xc.codifferential(c, FormField(0, c.grid, np.zeros(c.grid.node_count)))


def test_codifferential_of_zero_is_zero(ctx):
    c = ctx("sphere", 0.0, 110)
    out = xc.codifferential(c, FormField(1, c.grid, np.zeros((c.grid.node_count, 3))))
    assert np.abs(out.values).max() == 0.0


def test_sphere_spectrum_low_mode(ctx):
    c = ctx("sphere", 0.0, 302)
    col = c.projector.basis[:, sh.index_map(1, 0) - 1]
    df = xc.exterior_derivative(c, FormField(0, c.grid, col))
    dd = xc.codifferential(c, df)
    assert np.abs(dd.values - 2.0 * col).max() < 1e-11


def test_sphere_spectrum_all_modes_to_degree_eight(ctx):
    c = ctx("sphere", 0.0, 590)
    op = c.projector
    worst = 0.0
    for n in range(1, 9):
        for m in range(-n, n + 1):
            col = op.basis[:, sh.index_map(n, m) - 1]
            dd = xc.codifferential(c, xc.exterior_derivative(c, FormField(0, c.grid, col)))
            worst = max(worst, np.abs(dd.values - n * (n + 1.0) * col).max() / (n * (n + 1.0)))
    assert worst < 1e-9


def test_div_sign_convention(ctx):
    c = ctx("sphere", 0.0, 302)
    col = c.projector.basis[:, sh.index_map(1, 0) - 1]
    dv = xc.div(c, xc.grad(c, col))
    assert np.abs(dv + 2.0 * col).max() < 1e-11


def test_curl_of_gradient_vanishes(ctx):
    c = ctx("sphere", 0.0, 302)
    f = np.exp(c.grid.xyz[:, 2])
    G = xc.grad(c, f)
    cg = xc.curl(c, G)
    assert _qnorm(c.grid, cg) <= 1e-8 * _qnorm(c.grid, G)


@pytest.mark.parametrize("preset,r0", [("sphere", 0.0), ("dimple", 0.4), ("fountain", 0.4)])
def test_stokes_on_closed_surface(ctx, rng, preset, r0):
    c = ctx(preset, r0, 302)
    for _ in range(2):
        v = _random_tangent(c, rng)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", forms.TangencyWarning)
            omega = forms.flat(c.geometry, v)
        dw = xc.exterior_derivative(c, omega)
        total = lebedev.surface_integral(dw.values, c.grid, c.geometry)
        assert abs(total) <= 1e-8 * _qnorm(c.grid, v)


def test_divergence_theorem_on_closed_surface(ctx, rng):
    c = ctx("dimple", 0.4, 302)
    v = _random_tangent(c, rng)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", forms.TangencyWarning)
        omega = forms.flat(c.geometry, v)
    dstar = xc.exterior_derivative(c, xc.hodge_star(c, omega))
    total = lebedev.surface_integral(dstar.values, c.grid, c.geometry)
    assert abs(total) <= 1e-8 * _qnorm(c.grid, v)


def test_hodge_laplacian_eigenfield(ctx):
    """On exact 1-form eigenfields d Y_n^m: delta d (dY) = 0 and
    d delta (dY) = n(n+1) dY, so the 1-form operator gives -n(n+1) dY."""
    c = ctx("sphere", 0.0, 302)
    n, m = 3, 2
    col = c.projector.basis[:, sh.index_map(n, m) - 1]
    dY = xc.exterior_derivative(c, FormField(0, c.grid, col))
    lam = n * (n + 1.0)
    out = xc.hodge_laplacian_1form(c, dY)
    assert np.abs(out.values + lam * dY.values).max() < 1e-8 * lam

    boch = xc.bochner_style_1form(c, dY)
    assert np.abs(boch.values).max() < 1e-8 * lam


def test_codifferential_of_df_matches_golden_spectrally(ctx):
    """delta(df) for the manufactured solution equals the golden source term;
    the error decreases with node count (computer-algebra oracle)."""
    errs = []
    for n in (194, 302, 434):
        c = ctx("dimple", 0.4, n)
        case = pde.manufactured_case("dimple", 0.4, "exp-poly", c.grid, op=c.projector)
        df = xc.exterior_derivative(c, FormField(0, c.grid, case.u))
        dd = xc.codifferential(c, df)
        errs.append(pde.relative_error(dd.values, case.g, c.grid))
    assert errs[0] > errs[1] > errs[2]
    assert errs[2] < 5e-2
