import numpy as np
import pytest

from radialdec import forms
from radialdec.errors import FormDegreeError
from radialdec.forms import FormField, TangencyWarning


@pytest.fixture(scope="module")
def dimple(ctx):
    return ctx("dimple", 0.4, 194).geometry


def test_flat_sharp_identity_on_tangent_input(dimple, rng):
    c = rng.standard_normal((dimple.node_count, 2))
    v = np.einsum("lik,lk->li", dimple.A, c)
    alpha = forms.flat(dimple, v)
    assert alpha.degree == 1
    assert np.abs(forms.sharp(alpha) - v).max() < 1e-13
    # and the sharp is the stored array itself
    assert forms.sharp(alpha) is alpha.values


def test_flat_projects_and_warns_on_normal_part(dimple, rng):
    v = rng.standard_normal((dimple.node_count, 3))
    with pytest.warns(TangencyWarning):
        alpha = forms.flat(dimple, v)
    assert np.abs(np.sum(alpha.values * dimple.normal, axis=1)).max() < 1e-12


def test_tangency_of_one_forms(dimple, rng):
    c = rng.standard_normal((dimple.node_count, 2))
    v = np.einsum("lik,lk->li", dimple.A, c)
    alpha = forms.flat(dimple, v)
    norms = np.linalg.norm(alpha.values, axis=1)
    dots = np.abs(np.sum(alpha.values * dimple.normal, axis=1))
    assert np.all(dots <= 1e-10 * np.maximum(norms, 1e-30))


def test_covariant_components_two_routes_agree(dimple, rng):
    c = rng.standard_normal((dimple.node_count, 2))
    v = np.einsum("lik,lk->li", dimple.A, c)
    direct = forms.chart_covariant_components(dimple, v)
    via_metric = np.einsum(
        "lij,lj->li", dimple.I, dimple.chart_components(v))
    assert np.abs(direct - via_metric).max() < 1e-12


def test_covariant_components_on_equator_of_sphere(ctx):
    M = ctx("sphere", 0.0, 110).geometry
    eq = np.argmin(np.abs(M.grid.xyz[:, 2]) + np.abs(M.grid.xyz[:, 1] - 1))
    v = M.sigma_theta[eq]
    cov = forms.chart_covariant_components(M, M.sigma_theta)[eq]
    assert np.allclose(cov, [np.sin(M.phi[eq]) ** 2, 0.0], atol=1e-12)
    assert np.allclose(v @ v, np.sin(M.phi[eq]) ** 2, atol=1e-12)


def test_chart_component_round_trip(dimple, rng):
    c = rng.standard_normal((dimple.node_count, 2))
    v = np.einsum("lik,lk->li", dimple.A, c)
    comp = dimple.chart_components(v)
    back = np.einsum("lik,lk->li", dimple.A, comp)
    assert np.abs(back - v).max() < 1e-12


def test_one_form_from_chart_components(dimple):
    # alpha = sigma_theta flat: covariant components are the metric row
    cov_t = dimple.I[:, 0, 0]
    cov_p = dimple.I[:, 1, 0]
    alpha = forms.one_form_from_chart_components(dimple, cov_t, cov_p)
    assert np.abs(alpha.values - dimple.sigma_theta).max() < 1e-10


def test_chart_tag_mismatch_rejected(dimple):
    wrong = 1 - dimple.chart
    with pytest.raises(ValueError):
        forms.one_form_from_chart_components(
            dimple, np.ones(dimple.node_count), np.ones(dimple.node_count), wrong)


def test_zero_chart_components_give_zero_vectors(dimple):
    z = np.zeros(dimple.node_count)
    alpha = forms.one_form_from_chart_components(dimple, z, z)
    assert np.abs(alpha.values).max() == 0.0


def test_from_expression_dispatch(dimple, rng):
    L = dimple.node_count
    s = rng.standard_normal(L)
    assert forms.from_expression(dimple, 0, scalar=s).degree == 0
    assert forms.from_expression(dimple, 2, scalar=s).degree == 2
    c = rng.standard_normal((L, 2))
    v = np.einsum("lik,lk->li", dimple.A, c)
    assert forms.from_expression(dimple, 1, vectors=v).degree == 1
    with pytest.raises(FormDegreeError):
        forms.from_expression(dimple, 3, scalar=s)
    with pytest.raises(ValueError):
        forms.from_expression(dimple, 1)


def test_two_form_dual_and_chart_coefficient(dimple, rng):
    s = rng.standard_normal(dimple.node_count)
    omega = forms.two_form_from_dual(dimple.grid, s)
    assert np.array_equal(forms.dual_scalar(omega), s)
    w = forms.chart_coefficient(omega, dimple)
    assert np.abs(w - s * dimple.sqrt_g).max() < 1e-14


def test_degree_and_shape_validation(dimple):
    with pytest.raises(FormDegreeError):
        FormField(3, dimple.grid, np.zeros(dimple.node_count))
    with pytest.raises(ValueError):
        FormField(1, dimple.grid, np.zeros(dimple.node_count))
    with pytest.raises(FormDegreeError):
        forms.sharp(FormField(0, dimple.grid, np.zeros(dimple.node_count)))


def test_csv_dump_schema(tmp_path, dimple, rng):
    scalar = FormField(0, dimple.grid, rng.standard_normal(dimple.node_count))
    p0 = tmp_path / "scalar.csv"
    forms.dump_csv(scalar, p0)
    assert p0.read_text().splitlines()[0] == "node,value"
    c = rng.standard_normal((dimple.node_count, 2))
    vec = forms.flat(dimple, np.einsum("lik,lk->li", dimple.A, c))
    p1 = tmp_path / "vec.csv"
    forms.dump_csv(vec, p1)
    lines = p1.read_text().splitlines()
    assert lines[0] == "node,vx,vy,vz"
    assert len(lines) == dimple.node_count + 1
