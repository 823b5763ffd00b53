"""Galerkin assembly and solution of operator equations built from d and star.

The stiffness matrix applies the composed numerical operator chain to each
basis function's node samples and projects back, so the solver inherits
exactly the approximation properties of the node-level operators.  The
constant mode is pinned to zero by row/column replacement (closed surface,
no boundary).
"""

from __future__ import annotations

import hashlib
import json
import os
import re
import warnings
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import excalc, lebedev, reference, sphharm
from .errors import FormDegreeError, GoldenDataError, NearSingularError
from .forms import FormField
from .hyperinterp import ProjectionOperator, SpectralField
from .lebedev import LebedevGrid

GENERATOR_VERSION = 1
GOLDEN_ENV = "RADIALDEC_GOLDEN_DIR"
_MEAN_FREE_TOL = 1.0e-6


class OperatorChain:
    """A composition of 'd' and 'star' steps (applied first-to-last), with an
    optional leading sign, degree-checked at construction."""

    _DEGREE_MAP = {"d": lambda k: min(k + 1, 2), "star": lambda k: 2 - k}

    def __init__(self, steps, input_degree: int = 0, sign: float = 1.0):
        self.steps = tuple(steps)
        self.sign = float(sign)
        k = input_degree
        for s in self.steps:
            if s not in self._DEGREE_MAP:
                raise ValueError(f"unknown chain step {s!r}")
            k = self._DEGREE_MAP[s](k)
        self.input_degree = input_degree
        self.output_degree = k

    def apply(self, ctx: excalc.OperatorContext, form: FormField) -> FormField:
        if form.degree != self.input_degree:
            raise FormDegreeError(
                f"chain expects degree {self.input_degree}, got {form.degree}"
            )
        for s in self.steps:
            form = (excalc.exterior_derivative if s == "d" else excalc.hodge_star)(ctx, form)
        if self.sign != 1.0:
            form = FormField(form.degree, form.grid, self.sign * form.values)
        return form


def laplace_beltrami_chain() -> OperatorChain:
    """-delta d with delta = -(star d star): equals star d star d, scalar in
    and scalar out, eigenvalues -n(n+1) on the sphere."""
    return OperatorChain(("d", "star", "d", "star"), input_degree=0)


@dataclass
class GalerkinSystem:
    max_degree: int
    K: np.ndarray
    M: np.ndarray
    ctx: excalc.OperatorContext
    pin_zero_mode: bool = True


def assemble(ctx: excalc.OperatorContext, chain: OperatorChain) -> GalerkinSystem:
    """Stiffness K[i, j] = <chain Y_j, Y_i>_Q and mass M[i, j] = <Y_j, Y_i>_Q."""
    if chain.input_degree != 0 or chain.output_degree != 0:
        raise FormDegreeError(
            f"Galerkin assembly needs a scalar-to-scalar chain, got degrees "
            f"{chain.input_degree} -> {chain.output_degree}"
        )
    op = ctx.projector
    n = op.n_modes
    K = np.empty((n, n))
    grid = ctx.grid
    for j in range(n):
        out = chain.apply(ctx, FormField(0, grid, op.basis[:, j]))
        K[:, j] = op.basis.T @ (grid.weights * out.values)
    M = op.basis.T @ (grid.weights[:, None] * op.basis)
    return GalerkinSystem(op.max_degree, K, M, ctx)


def solve(system: GalerkinSystem, g_samples) -> SpectralField:
    """Solve K u = -M g with the zero mode pinned to zero."""
    op = system.ctx.projector
    ghat = op.project(g_samples).coeffs.copy()
    gnorm = np.sqrt(lebedev.inner_product_Q(g_samples, g_samples, system.ctx.grid))
    if abs(ghat[0]) > _MEAN_FREE_TOL * max(gnorm, 1e-300):
        warnings.warn(
            f"source has mean component {ghat[0]:.3e} above "
            f"{_MEAN_FREE_TOL:g} * ||g||; projecting it out",
            stacklevel=2,
        )
    ghat[0] = 0.0
    rhs = -system.M @ ghat
    K = system.K.copy()
    if system.pin_zero_mode:
        K[0, :] = 0.0
        K[:, 0] = 0.0
        K[0, 0] = 1.0
        rhs[0] = 0.0
    try:
        uhat = np.linalg.solve(K, rhs)
    except np.linalg.LinAlgError as exc:
        raise NearSingularError(
            f"pinned system is singular: {exc}", condition=float(np.linalg.cond(K))
        ) from exc
    resid = np.linalg.norm(K @ uhat - rhs)
    scale = max(np.linalg.norm(rhs), 1e-300)
    if resid > 1e-8 * scale:
        raise NearSingularError(
            f"pinned solve residual {resid:.3e} exceeds 1e-8 * ||rhs||",
            condition=float(np.linalg.cond(K)),
        )
    return SpectralField(system.max_degree, uhat)


@dataclass
class ManufacturedCase:
    preset: str
    r0: float
    case: str
    u: np.ndarray
    g: np.ndarray
    provenance: str


def manifold_hash(preset: str, r0: float, max_degree: int, grid: LebedevGrid) -> str:
    """Integrity digest shared (by convention) with the golden-data generator."""
    key = (
        f"{preset}|r0={r0:.17g}|maxDegree={max_degree}|nodes={grid.node_count}"
        f"|grid={lebedev.fingerprint(grid)}"
    )
    return hashlib.sha256(key.encode()).hexdigest()[:32]


def golden_dir(explicit=None) -> Path:
    if explicit is not None:
        return Path(explicit)
    env = os.environ.get(GOLDEN_ENV)
    if env:
        return Path(env)
    return Path(__file__).resolve().parents[2] / "golden"


def golden_path(base: Path, case: str, preset: str, r0: float, node_count: int) -> Path:
    return Path(base) / f"{case}_{preset}_r{r0:.2f}_n{node_count}.json"


def load_golden(path: Path, preset: str, r0: float, grid: LebedevGrid) -> dict:
    path = Path(path)
    if not path.exists():
        raise GoldenDataError(
            f"golden file {path} not found; generate it with:\n"
            f"  oracle generate --case <case> --manifold {preset} --r0 {r0:g} "
            f"--nodes {grid.node_count} --grid-csv <grid.csv> --out {path.parent}"
        )
    with open(path) as f:
        data = json.load(f)
    expect = manifold_hash(preset, r0, grid.max_degree, grid)
    if data.get("hash") != expect:
        raise GoldenDataError(
            f"golden file {path} hash {data.get('hash')} does not match "
            f"manifold/grid hash {expect}"
        )
    manifold = data.get("manifold", {})
    if (manifold.get("preset") != preset
            or manifold.get("r0") != r0
            or manifold.get("maxDegree") != grid.max_degree
            or data.get("nodeCount") != grid.node_count):
        raise GoldenDataError(f"golden file {path} manifold fields mismatch")
    return data


_EIG_RE = re.compile(r"^eig-(\d+)-(m?)(\d+)$")


def manufactured_case(preset: str, r0: float, case: str, grid: LebedevGrid,
                      golden: Path | None = None,
                      op: ProjectionOperator | None = None) -> ManufacturedCase:
    """Exact-solution / source pairs: analytic on the sphere, golden elsewhere."""
    is_sphere = preset == "sphere" or r0 == 0.0
    if is_sphere:
        m = _EIG_RE.match(case)
        if m:
            n = int(m.group(1))
            order = int(m.group(3)) * (-1 if m.group(2) else 1)
            if op is None:
                op = ProjectionOperator(grid)
            u = op.basis[:, sphharm.index_map(n, order) - 1].copy()
            return ManufacturedCase(preset, r0, case, u, n * (n + 1.0) * u,
                                    "analytic-sphere")
        if case == "exp-poly":
            u, g = reference.lb_solution_sphere(grid)
            return ManufacturedCase(preset, r0, case, u, g, "analytic-sphere")
        raise ValueError(f"unknown sphere case {case!r}")
    path = golden_path(golden_dir(golden), case, preset, r0, grid.node_count)
    data = load_golden(path, preset, r0, grid)
    u = np.asarray(data["u"], dtype=float)
    g = np.asarray(data["g"], dtype=float)
    return ManufacturedCase(preset, r0, case, u, g, "golden-file")


def relative_error(numeric, exact, grid: LebedevGrid) -> float:
    """Q-weighted relative l2 error; vectors use the embedding norm."""
    numeric = np.asarray(numeric, dtype=float)
    exact = np.asarray(exact, dtype=float)
    if numeric.ndim == 2:
        diff = np.sum((numeric - exact) ** 2, axis=1)
        ref = np.sum(exact**2, axis=1)
    else:
        diff = (numeric - exact) ** 2
        ref = exact**2
    return float(np.sqrt(np.sum(grid.weights * diff) / np.sum(grid.weights * ref)))


def solution_error(system: GalerkinSystem, case: ManufacturedCase) -> float:
    """Solve with the case's source and compare against its exact solution,
    both made mean-free (the solution is defined up to a constant)."""
    uhat = solve(system, case.g)
    op = system.ctx.projector
    u_num = op.basis @ uhat.coeffs
    u_ref = case.u - lebedev.inner_product_Q(
        case.u, op.basis[:, 0], system.ctx.grid
    ) * op.basis[:, 0]
    return relative_error(u_num, u_ref, system.ctx.grid)
