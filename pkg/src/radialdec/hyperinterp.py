"""Hyperinterpolation: projection onto the truncated basis and smooth evaluation.

A ProjectionOperator pairs a Lebedev grid with the basis truncated at
N = floor(precision / 2).  Projection is a weighted matrix product; the
discrete Gram matrix is the identity by construction, so no solve is needed.

Fields can be evaluated (with derivatives up to second order) in either
chart.  Chart-B evaluation rotates the coefficient vector: composing a
band-limited field with the rigid rotation that defines chart B is again
band-limited, and the rotation matrix on coefficients is computed exactly
by quadrature.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

from . import charts, sphharm
from .lebedev import LebedevGrid


@dataclass
class SpectralField:
    """Coefficients of a scalar field in the real basis up to max_degree."""

    max_degree: int
    coeffs: np.ndarray

    def __post_init__(self):
        self.coeffs = np.asarray(self.coeffs, dtype=float)
        expected = sphharm.basis_size(self.max_degree)
        if self.coeffs.shape != (expected,):
            raise ValueError(
                f"coefficient vector has length {self.coeffs.shape}, "
                f"expected ({expected},) for degree {self.max_degree}"
            )
        if not np.all(np.isfinite(self.coeffs)):
            raise ValueError("coefficients must be finite")


class ProjectionOperator:
    """L2-orthogonal projection onto the basis resolved by a grid."""

    def __init__(self, grid: LebedevGrid):
        self.grid = grid
        self.max_degree = grid.max_degree
        raw = sphharm.eval_basis(self.max_degree, grid.theta, grid.phi)
        self.norms = np.sqrt(np.sum(grid.weights[:, None] * raw * raw, axis=0))
        self.basis = raw / self.norms
        self._rotation = None

    @property
    def n_modes(self) -> int:
        return self.basis.shape[1]

    @property
    def rotation_to_chart_b(self) -> np.ndarray:
        """Coefficient transform for composing a field with the chart-B rotation.

        D[i, j] = <Y_i o R, Y_j>_Q; exact for band-limited fields since the
        rotated basis stays band-limited.  Coefficients of f o R are D.T @ f.
        """
        if self._rotation is None:
            rotated = self.grid.xyz @ charts.ROT_B.T
            t, p = charts.angles_from_unit(rotated, charts.ChartId.A)
            basis_rot = sphharm.eval_basis(self.max_degree, t, p, norms=self.norms)
            self._rotation = basis_rot.T @ (self.grid.weights[:, None] * self.basis)
        return self._rotation

    def project(self, samples) -> SpectralField:
        samples = np.asarray(samples, dtype=float)
        if samples.ndim != 1 or samples.shape[0] != self.grid.node_count:
            raise ValueError(
                f"sample shape {samples.shape} does not match node count "
                f"{self.grid.node_count}"
            )
        return SpectralField(self.max_degree, self.basis.T @ (self.grid.weights * samples))

    def project_columns(self, samples: np.ndarray) -> np.ndarray:
        """Project several sample columns at once; returns a coefficient matrix."""
        samples = np.asarray(samples, dtype=float)
        return self.basis.T @ (self.grid.weights[:, None] * samples)

    def chart_coeffs(self, field: SpectralField, chart) -> np.ndarray:
        self._check(field)
        if int(chart) == int(charts.ChartId.A):
            return field.coeffs
        return self.rotation_to_chart_b.T @ field.coeffs

    def evaluate(self, field: SpectralField, theta, phi, chart=charts.ChartId.A):
        c = self.chart_coeffs(field, chart)
        B = sphharm.eval_basis(self.max_degree, theta, phi, norms=self.norms)
        return B @ c

    def evaluate_grad(self, field: SpectralField, theta, phi, chart=charts.ChartId.A,
                      pole_band: float = sphharm.DEFAULT_POLE_BAND):
        """(f, df/dtheta, df/dphi) in the given chart's coordinates."""
        c = self.chart_coeffs(field, chart)
        B = sphharm.eval_basis(self.max_degree, theta, phi, norms=self.norms)
        Bt = sphharm.eval_basis_dtheta(self.max_degree, theta, phi, norms=self.norms)
        Bp = sphharm.eval_basis_dphi(self.max_degree, theta, phi, norms=self.norms,
                                     pole_band=pole_band)
        return B @ c, Bt @ c, Bp @ c

    def evaluate_hess(self, field: SpectralField, theta, phi, chart=charts.ChartId.A,
                      pole_band: float = sphharm.DEFAULT_POLE_BAND):
        """(d2f/dtheta2, d2f/dtheta dphi, d2f/dphi2) in the chart's coordinates.

        Azimuthal derivatives use the exact in-basis closure; the pure polar
        second derivative differentiates the recurrence analytically.
        """
        c = self.chart_coeffs(field, chart)
        ct = sphharm.apply_theta_derivative(c, self.max_degree, self.norms)
        ctt = sphharm.apply_theta_derivative(ct, self.max_degree, self.norms)
        B = sphharm.eval_basis(self.max_degree, theta, phi, norms=self.norms)
        Bp = sphharm.eval_basis_dphi(self.max_degree, theta, phi, norms=self.norms,
                                     pole_band=pole_band)
        Bpp = sphharm.eval_basis_dphiphi(self.max_degree, theta, phi, norms=self.norms,
                                         pole_band=pole_band)
        return B @ ctt, Bp @ ct, Bpp @ c

    def _check(self, field: SpectralField) -> None:
        if field.max_degree != self.max_degree:
            raise ValueError(
                f"field degree {field.max_degree} != operator degree {self.max_degree}"
            )


def project(samples, op: ProjectionOperator) -> SpectralField:
    return op.project(samples)


def save_coeffs_csv(field: SpectralField, path) -> None:
    """Write (n, m, coeff) triplets."""
    with open(path, "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(["n", "m", "coeff"])
        for i, c in enumerate(field.coeffs, start=1):
            n, m = sphharm.flat_to_nm(i)
            w.writerow([n, m, f"{c:.17g}"])


def load_coeffs_csv(path) -> SpectralField:
    rows = []
    with open(path, newline="") as f:
        reader = csv.reader(f)
        header = next(reader)
        if header[:3] != ["n", "m", "coeff"]:
            raise ValueError("expected header n,m,coeff")
        for n, m, c in reader:
            rows.append((int(n), int(m), float(c)))
    max_degree = max(n for n, _, _ in rows)
    coeffs = np.zeros(sphharm.basis_size(max_degree))
    for n, m, c in rows:
        coeffs[sphharm.index_map(n, m) - 1] = c
    return SpectralField(max_degree, coeffs)
