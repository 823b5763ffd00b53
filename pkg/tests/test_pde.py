import json

import numpy as np
import pytest

from radialdec import lebedev, pde, sphharm as sh
from radialdec.errors import FormDegreeError, GoldenDataError


@pytest.fixture(scope="module")
def sphere_system(ctx):
    c = ctx("sphere", 0.0, 302)
    return pde.assemble(c, pde.laplace_beltrami_chain())


def test_chain_degree_checking():
    chain = pde.laplace_beltrami_chain()
    assert chain.input_degree == 0 and chain.output_degree == 0
    with pytest.raises(ValueError):
        pde.OperatorChain(("d", "curl"))
    bad = pde.OperatorChain(("star",), input_degree=0)  # 0 -> 2
    assert bad.output_degree == 2


def test_assemble_rejects_degree_mismatch(ctx):
    c = ctx("sphere", 0.0, 110)
    with pytest.raises(FormDegreeError):
        pde.assemble(c, pde.OperatorChain(("star",), input_degree=0))


def test_sphere_stiffness_is_diagonal_spectrum(sphere_system):
    K = sphere_system.K
    n_of, _ = sh.degrees_orders(sphere_system.max_degree)
    assert np.abs(np.diag(K) + n_of * (n_of + 1.0)).max() < 1e-9
    assert np.abs(K - np.diag(np.diag(K))).max() < 1e-9


def test_mass_matrix_is_identity(sphere_system):
    assert np.abs(sphere_system.M - np.eye(sphere_system.M.shape[0])).max() < 1e-12


def test_zero_mode_row_and_column_small(sphere_system):
    assert np.linalg.norm(sphere_system.K[0, :]) < 1e-8
    assert np.linalg.norm(sphere_system.K[:, 0]) < 1e-8


def test_eigenpair_solve(sphere_system, ctx):
    c = ctx("sphere", 0.0, 302)
    case = pde.manufactured_case("sphere", 0.0, "eig-1-0", c.grid, op=c.projector)
    u = pde.solve(sphere_system, case.g)
    expected = np.zeros_like(u.coeffs)
    expected[sh.index_map(1, 0) - 1] = 1.0
    assert np.abs(u.coeffs - expected).max() < 1e-10


def test_zero_source_gives_zero_solution(sphere_system):
    u = pde.solve(sphere_system, np.zeros(302))
    assert np.abs(u.coeffs).max() == 0.0


def test_zero_mode_pinned_exactly(sphere_system, ctx):
    c = ctx("sphere", 0.0, 302)
    case = pde.manufactured_case("sphere", 0.0, "exp-poly", c.grid, op=c.projector)
    with pytest.warns(UserWarning):
        u = pde.solve(sphere_system, case.g + 0.5)  # constant offset: not mean-free
    assert u.coeffs[0] == 0.0


def test_galerkin_residual_small(sphere_system, ctx, rng):
    c = ctx("sphere", 0.0, 302)
    n_of, _ = sh.degrees_orders(c.projector.max_degree)
    coeffs = np.where((n_of >= 1) & (n_of <= 8), rng.standard_normal(n_of.shape), 0.0)
    g_samples = c.projector.basis @ (n_of * (n_of + 1.0) * coeffs)
    u = pde.solve(sphere_system, g_samples)
    K = sphere_system.K.copy()
    K[0, :] = 0.0
    K[:, 0] = 0.0
    K[0, 0] = 1.0
    ghat = c.projector.project(g_samples).coeffs
    ghat[0] = 0.0
    rhs = -sphere_system.M @ ghat
    rhs[0] = 0.0
    assert np.linalg.norm(K @ u.coeffs - rhs) < 1e-10
    # band-limited recovery
    assert np.abs(u.coeffs - coeffs).max() < 1e-9 * np.abs(coeffs).max()


def test_deformed_stiffness_symmetry_measured(ctx):
    """The operator chain is self-adjoint in the surface measure, but K uses
    the sphere-measure inner product, so the deformed-manifold asymmetry is
    O(1) in the aliasing-dominated high-degree block and shrinks with
    resolution.  Frozen from measurement: 0.134 at 302 nodes, 0.105 at 590."""
    asym = {}
    for n in (302, 590):
        c = ctx("dimple", 0.4, n)
        system = pde.assemble(c, pde.laplace_beltrami_chain())
        asym[n] = np.linalg.norm(system.K - system.K.T) / np.linalg.norm(system.K)
    assert asym[302] < 0.2
    assert asym[590] < asym[302]


def test_manufactured_case_sphere_eigen(ctx):
    c = ctx("sphere", 0.0, 110)
    case = pde.manufactured_case("sphere", 0.0, "eig-2-m1", c.grid, op=c.projector)
    col = c.projector.basis[:, sh.index_map(2, -1) - 1]
    assert np.abs(case.u - col).max() < 1e-14
    assert np.abs(case.g - 6.0 * col).max() < 1e-13
    assert case.provenance == "analytic-sphere"


def test_manufactured_case_golden_loads(ctx):
    c = ctx("dimple", 0.4, 302)
    case = pde.manufactured_case("dimple", 0.4, "exp-poly", c.grid, op=c.projector)
    assert case.provenance == "golden-file"
    assert case.u.shape == (302,) and case.g.shape == (302,)
    # the source integrates to zero against the surface measure (closed
    # manifold); its solid-angle mean is nonzero and gets projected out
    total = lebedev.surface_integral(case.g, c.grid, c.geometry)
    scale = np.sqrt(lebedev.inner_product_Q(case.g, case.g, c.grid))
    assert abs(total) < 1e-2 * scale


def test_missing_golden_names_generator_command(tmp_path):
    g = lebedev.grid(110)
    with pytest.raises(GoldenDataError) as err:
        pde.manufactured_case("dimple", 0.15, "exp-poly", g, golden=tmp_path)
    msg = str(err.value)
    assert "oracle generate" in msg and "--manifold dimple" in msg


def test_tampered_golden_rejected(tmp_path):
    g = lebedev.grid(110)
    src = pde.golden_path(pde.golden_dir(), "exp-poly", "dimple", 0.4, 110)
    data = json.loads(src.read_text())
    # corrupted integrity hash
    bad = tmp_path / src.name
    tampered = dict(data)
    tampered["hash"] = "0" * 32
    bad.write_text(json.dumps(tampered))
    with pytest.raises(GoldenDataError):
        pde.load_golden(bad, "dimple", 0.4, g)
    # file claiming different manifold parameters than requested
    bad.write_text(json.dumps(data))
    with pytest.raises(GoldenDataError):
        pde.load_golden(bad, "dimple", 0.35, g)
    # stored manifold fields inconsistent with the (matching) hash request
    tampered = dict(data)
    tampered["manifold"] = dict(data["manifold"], r0=0.3999)
    bad.write_text(json.dumps(tampered))
    with pytest.raises(GoldenDataError):
        pde.load_golden(bad, "dimple", 0.4, g)


def test_sphere_manufactured_convergence(ctx):
    errs = []
    for n in (110, 194, 302):
        c = ctx("sphere", 0.0, n)
        system = pde.assemble(c, pde.laplace_beltrami_chain())
        case = pde.manufactured_case("sphere", 0.0, "exp-poly", c.grid, op=c.projector)
        errs.append(pde.solution_error(system, case))
    assert errs[0] > errs[1] > errs[2]
    assert errs[2] < 1e-8


def test_zero_mode_column_small_on_deformed(ctx):
    """Constants stay in the operator kernel on any manifold (column); the
    row is an integral against the solid-angle measure and is only small on
    the sphere, where that measure matches the surface measure."""
    c = ctx("dimple", 0.4, 302)
    system = pde.assemble(c, pde.laplace_beltrami_chain())
    assert np.linalg.norm(system.K[:, 0]) < 1e-8


def test_golden_dir_env_override(monkeypatch, tmp_path):
    monkeypatch.setenv(pde.GOLDEN_ENV, str(tmp_path))
    assert pde.golden_dir() == tmp_path
    assert pde.golden_dir("/explicit/wins") == pde.Path("/explicit/wins")
    monkeypatch.delenv(pde.GOLDEN_ENV)
    assert pde.golden_dir().name == "golden"
