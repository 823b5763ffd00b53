"""Numerical exterior derivative, Hodge star, codifferential, and vector calculus.

The exterior derivative differentiates the hyperinterpolant of the form's
chart-free representation; the Hodge star is pointwise in each node's chart.
Node evaluation matrices are cached per context, so repeated operator
application (e.g. Galerkin assembly) costs a few matrix-vector products.

Sign conventions: the chart orientation is the literal (theta, phi) one, so
the 1-form star rotates sharp vectors by v -> v x n with n the outward
normal.  The codifferential carries the compensating minus sign,
delta = -(star d star), which makes delta d act as +n(n+1) on degree-n
harmonics of the sphere and div(F) = -delta(flat F) the classical divergence.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import sphharm
from .charts import ChartId
from .errors import FormDegreeError
from .forms import FormField
from .geometry import ManifoldGeometry
from .hyperinterp import ProjectionOperator
from .lebedev import LebedevGrid


@dataclass
class OperatorContext:
    geometry: ManifoldGeometry
    projector: ProjectionOperator
    pole_band: float = sphharm.DEFAULT_POLE_BAND
    cond_limit: float = 1.0e12
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.geometry.grid is not self.projector.grid:
            raise ValueError("geometry and projector must share one grid")

    @property
    def grid(self) -> LebedevGrid:
        return self.geometry.grid

    def _node_blocks(self):
        """Basis value/derivative matrices at the grid nodes, per chart subset."""
        if "blocks" not in self._cache:
            geom, op = self.geometry, self.projector
            blocks = []
            for cid in (ChartId.A, ChartId.B):
                mask = geom.chart == int(cid)
                if not np.any(mask):
                    continue
                t, p = geom.theta[mask], geom.phi[mask]
                B = sphharm.eval_basis(op.max_degree, t, p, norms=op.norms)
                Bt = sphharm.eval_basis_dtheta(op.max_degree, t, p, norms=op.norms)
                Bp = sphharm.eval_basis_dphi(op.max_degree, t, p, norms=op.norms,
                                             pole_band=self.pole_band)
                blocks.append((cid, mask, B, Bt, Bp))
            self._cache["blocks"] = blocks
        return self._cache["blocks"]

    def node_derivatives(self, coeff_columns: np.ndarray):
        """Evaluate hyperinterpolants and their chart derivatives at all nodes.

        coeff_columns has shape (n_modes, K); returns (vals, d_theta, d_phi),
        each (L, K), with derivatives taken in each node's own chart.
        """
        C = np.atleast_2d(coeff_columns.T).T
        L = self.grid.node_count
        out = [np.empty((L, C.shape[1])) for _ in range(3)]
        rot = None
        for cid, mask, B, Bt, Bp in self._node_blocks():
            if cid == ChartId.B:
                if rot is None:
                    rot = self.projector.rotation_to_chart_b
                Cc = rot.T @ C
            else:
                Cc = C
            out[0][mask] = B @ Cc
            out[1][mask] = Bt @ Cc
            out[2][mask] = Bp @ Cc
        return out


def _require_grid(ctx: OperatorContext, form: FormField) -> None:
    if form.grid.node_count != ctx.grid.node_count:
        raise ValueError("form and context grids differ")


def exterior_derivative(ctx: OperatorContext, form: FormField) -> FormField:
    """The degree-raising derivative; 2-forms map to the typed zero."""
    _require_grid(ctx, form)
    geom = ctx.geometry
    if form.degree == 0:
        coeffs = ctx.projector.project(form.values).coeffs
        _, ft, fp = ctx.node_derivatives(coeffs[:, None])
        cov = np.concatenate([ft, fp], axis=1)
        contra = np.linalg.solve(geom.I, cov[..., None])[..., 0]
        vectors = np.einsum("lik,lk->li", geom.A, contra)
        return FormField(1, ctx.grid, vectors)
    if form.degree == 1:
        v = form.values
        comp_coeffs = ctx.projector.project_columns(v)
        _, dvt, dvp = ctx.node_derivatives(comp_coeffs)
        # chart components of the stored sharp: one metric solve
        c = np.linalg.solve(geom.I, np.einsum("lik,li->lk", geom.A, v)[..., None])[..., 0]
        dcov = {}
        for s, dA, dI, dv in (("theta", geom.dA_dtheta, geom.dI_dtheta, dvt),
                              ("phi", geom.dA_dphi, geom.dI_dphi, dvp)):
            # d_s(G A^-1 v) = (d_s G) c + G (d_s A^-1) v + G A^-1 (d_s v),
            # with d_s A^-1 = -A^-1 (d_s A) A^-1 applied through metric solves
            dAc = np.einsum("lik,lk->li", dA, c)
            u2 = np.linalg.solve(geom.I, np.einsum("lik,li->lk", geom.A, dAc)[..., None])[..., 0]
            u3 = np.linalg.solve(geom.I, np.einsum("lik,li->lk", geom.A, dv)[..., None])[..., 0]
            dcov[s] = (
                np.einsum("lij,lj->li", dI, c)
                - np.einsum("lij,lj->li", geom.I, u2)
                + np.einsum("lij,lj->li", geom.I, u3)
            )
        w = dcov["theta"][:, 1] - dcov["phi"][:, 0]
        return FormField(2, ctx.grid, w / geom.sqrt_g)
    # degree-3 forms vanish identically in two dimensions
    return FormField(2, ctx.grid, np.zeros(ctx.grid.node_count))


def hodge_star(ctx: OperatorContext, form: FormField) -> FormField:
    """Metric-dependent isomorphism between k-forms and (2-k)-forms."""
    _require_grid(ctx, form)
    geom = ctx.geometry
    if form.degree == 0:
        return FormField(2, ctx.grid, form.values.copy())
    if form.degree == 2:
        return FormField(0, ctx.grid, form.values.copy())
    # k = 1: chart formula with the Levi-Civita symbol and metric
    v = form.values
    contra = np.linalg.solve(geom.I, np.einsum("lik,li->lk", geom.A, v)[..., None])[..., 0]
    cov_star = np.stack([-geom.sqrt_g * contra[:, 1], geom.sqrt_g * contra[:, 0]], axis=-1)
    contra_star = np.linalg.solve(geom.I, cov_star[..., None])[..., 0]
    vectors = np.einsum("lik,lk->li", geom.A, contra_star)
    return FormField(1, ctx.grid, vectors)


def hodge_star_one_form_cross(ctx: OperatorContext, form: FormField) -> FormField:
    """Cross-product realization of the 1-form star; must agree with hodge_star."""
    if form.degree != 1:
        raise FormDegreeError("expects a 1-form")
    return FormField(1, ctx.grid, np.cross(form.values, ctx.geometry.normal))


def codifferential(ctx: OperatorContext, form: FormField) -> FormField:
    """The divergence-type operator, -(star d star); undefined on 0-forms."""
    if form.degree == 0:
        raise FormDegreeError("codifferential is undefined on 0-forms")
    out = hodge_star(ctx, exterior_derivative(ctx, hodge_star(ctx, form)))
    return FormField(out.degree, out.grid, -out.values)


def grad(ctx: OperatorContext, f_samples) -> np.ndarray:
    """Tangent gradient vectors of a scalar field."""
    df = exterior_derivative(ctx, FormField(0, ctx.grid, f_samples))
    return df.values


def div(ctx: OperatorContext, vectors) -> np.ndarray:
    """Classical divergence of a tangent vector field: -delta(F flat)."""
    from .forms import flat

    alpha = flat(ctx.geometry, vectors)
    return -codifferential(ctx, alpha).values


def curl(ctx: OperatorContext, vectors) -> np.ndarray:
    """Scalar curl in two dimensions: star(d(F flat))."""
    from .forms import flat

    alpha = flat(ctx.geometry, vectors)
    return hodge_star(ctx, exterior_derivative(ctx, alpha)).values


def laplacian_scalar(ctx: OperatorContext, f_samples) -> np.ndarray:
    """-delta d f: the scalar operator chain with the classical sphere spectrum
    -n(n+1)."""
    df = exterior_derivative(ctx, FormField(0, ctx.grid, f_samples))
    return -codifferential(ctx, df).values


def hodge_laplacian_1form(ctx: OperatorContext, form: FormField) -> FormField:
    """-(delta d + d delta) on 1-forms."""
    if form.degree != 1:
        raise FormDegreeError("expects a 1-form")
    dd = codifferential(ctx, exterior_derivative(ctx, form))
    sd = exterior_derivative(ctx, codifferential(ctx, form))
    return FormField(1, ctx.grid, -(dd.values + sd.values))


def bochner_style_1form(ctx: OperatorContext, form: FormField) -> FormField:
    """-delta d on 1-forms."""
    if form.degree != 1:
        raise FormDegreeError("expects a 1-form")
    dd = codifferential(ctx, exterior_derivative(ctx, form))
    return FormField(1, ctx.grid, -dd.values)
