"""Spectrally accurate exterior calculus on radial manifolds.

Modules: sphharm (real basis), lebedev (quadrature), hyperinterp
(projection and smooth evaluation), geometry (charts and frames), forms
(k-form representation), excalc (d, star and compositions), pde (Galerkin
solver), cli (convergence studies), reference (closed-form exact values).
"""

from .charts import ChartId, chart_select
from .excalc import OperatorContext
from .forms import FormField
from .geometry import ManifoldGeometry, NodeFrame, RadialShape, build
from .hyperinterp import ProjectionOperator, SpectralField
from .lebedev import LebedevGrid, grid, inner_product_Q, surface_integral

__version__ = "0.1.0"

__all__ = [
    "ChartId", "chart_select", "OperatorContext", "FormField",
    "ManifoldGeometry", "NodeFrame", "RadialShape", "build",
    "ProjectionOperator", "SpectralField", "LebedevGrid", "grid",
    "inner_product_Q", "surface_integral", "__version__",
]
