"""Differential k-forms sampled at Lebedev nodes, and the musical isomorphisms.

Storage is chart-free: 0-forms and 2-forms hold scalars (a 2-form holds its
Hodge-dual scalar), 1-forms hold the embedding-space tangent vectors of
their sharp.  Chart components exist only as derived per-node views.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import FormDegreeError
from .geometry import ManifoldGeometry
from .lebedev import LebedevGrid

TANGENCY_WARN_TOL = 1.0e-8


class TangencyWarning(UserWarning):
    pass


@dataclass
class FormField:
    degree: int
    grid: LebedevGrid
    values: np.ndarray  # (L,) scalars for k in {0, 2}; (L, 3) sharp vectors for k = 1

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        if self.degree not in (0, 1, 2):
            raise FormDegreeError(f"form degree must be 0, 1 or 2, got {self.degree}")
        want = (self.grid.node_count, 3) if self.degree == 1 else (self.grid.node_count,)
        if self.values.shape != want:
            raise ValueError(f"value array has shape {self.values.shape}, expected {want}")


def zero_form(grid: LebedevGrid, samples) -> FormField:
    return FormField(0, grid, samples)


def two_form_from_dual(grid: LebedevGrid, dual_samples) -> FormField:
    """Build a 2-form from its Hodge-dual scalar (the canonical storage)."""
    return FormField(2, grid, dual_samples)


def flat(geometry: ManifoldGeometry, vectors) -> FormField:
    """Lower a vector field to a 1-form; storage keeps the (projected) sharp."""
    vectors = np.asarray(vectors, dtype=float)
    tangent = geometry.tangent_project(vectors)
    discard = np.linalg.norm(vectors - tangent, axis=-1)
    scale = np.linalg.norm(vectors, axis=-1)
    bad = discard > TANGENCY_WARN_TOL * np.maximum(scale, 1e-300)
    if np.any(bad):
        warnings.warn(
            f"discarded non-tangent part above {TANGENCY_WARN_TOL:g} relative "
            f"at {int(bad.sum())} of {len(bad)} nodes",
            TangencyWarning,
            stacklevel=2,
        )
    return FormField(1, geometry.grid, tangent)


def sharp(form: FormField) -> np.ndarray:
    """Raise a 1-form to its tangent vector field (identity on storage)."""
    if form.degree != 1:
        raise FormDegreeError("sharp expects a 1-form")
    return form.values


def chart_covariant_components(geometry: ManifoldGeometry, vectors) -> np.ndarray:
    """Per-node covariant components (v_theta, v_phi) = (sigma_theta.v, sigma_phi.v)."""
    vectors = np.asarray(vectors, dtype=float)
    return np.einsum("lik,li->lk", geometry.A, vectors)


def one_form_from_chart_components(geometry: ManifoldGeometry, alpha_theta, alpha_phi,
                                   chart=None) -> FormField:
    """Build a 1-form from per-node covariant chart components.

    The components must be given in each node's selected chart; a chart tag
    array may be passed to assert agreement.
    """
    if chart is not None:
        chart = np.asarray(chart)
        if not np.array_equal(chart, geometry.chart):
            bad = int(np.sum(chart != geometry.chart))
            raise ValueError(
                f"chart components disagree with the node charts at {bad} nodes"
            )
    cov = np.stack([np.asarray(alpha_theta, dtype=float),
                    np.asarray(alpha_phi, dtype=float)], axis=-1)
    contra = np.linalg.solve(geometry.I, cov[..., None])[..., 0]
    vectors = np.einsum("lik,lk->li", geometry.A, contra)
    return FormField(1, geometry.grid, vectors)


def from_expression(geometry: ManifoldGeometry, k: int, *, scalar=None,
                    chart_components=None, vectors=None, chart=None) -> FormField:
    """Ingest a test field given as scalar samples, chart coefficients, or vectors."""
    if k == 0:
        if scalar is None:
            raise ValueError("k=0 requires scalar samples")
        return zero_form(geometry.grid, scalar)
    if k == 2:
        if scalar is None:
            raise ValueError("k=2 requires the dual-scalar samples")
        return two_form_from_dual(geometry.grid, scalar)
    if k == 1:
        if vectors is not None:
            return flat(geometry, vectors)
        if chart_components is not None:
            a_t, a_p = chart_components
            return one_form_from_chart_components(geometry, a_t, a_p, chart)
        raise ValueError("k=1 requires vectors or chart_components")
    raise FormDegreeError(f"unsupported form degree {k}")


def dual_scalar(form: FormField) -> np.ndarray:
    if form.degree != 2:
        raise FormDegreeError("dual_scalar expects a 2-form")
    return form.values


def chart_coefficient(form: FormField, geometry: ManifoldGeometry) -> np.ndarray:
    """Chart view w of a 2-form w dtheta ^ dphi: w = (dual scalar) * sqrt|g|."""
    return dual_scalar(form) * geometry.sqrt_g


def dump_csv(form: FormField, path) -> None:
    """Node index plus 1 (scalars) or 3 (vector) value columns."""
    with open(path, "w") as f:
        if form.degree == 1:
            f.write("node,vx,vy,vz\n")
            for l, v in enumerate(form.values):
                f.write(f"{l},{v[0]:.17g},{v[1]:.17g},{v[2]:.17g}\n")
        else:
            f.write("node,value\n")
            for l, v in enumerate(form.values):
                f.write(f"{l},{v:.17g}\n")
