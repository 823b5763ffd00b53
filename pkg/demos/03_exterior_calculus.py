"""The numerical exterior derivative and Hodge star.

Demonstrates the operator identities: the star rotates 1-forms, squares to
a sign, d after d vanishes, and the scalar operator chain reproduces the
sphere spectrum n(n+1).
"""

import numpy as np

from radialdec import FormField, OperatorContext, build, grid
from radialdec.excalc import (codifferential, exterior_derivative, grad,
                              hodge_star, laplacian_scalar)
from radialdec.geometry import RadialShape
from radialdec.hyperinterp import ProjectionOperator
from radialdec.sphharm import index_map

g = grid(302)
op = ProjectionOperator(g)
geom = build(RadialShape.from_preset("sphere", 0.0, op), g, op)
ctx = OperatorContext(geom, op)

# gradient of the height function z is its tangential projection
z = g.xyz[:, 2]
G = grad(ctx, z)
exact = np.array([0.0, 0.0, 1.0]) - z[:, None] * g.xyz
print(f"grad z deviation: {np.abs(G - exact).max():.2e}")

# the star of a 1-form is a 90-degree tangent rotation: applying it twice
# negates, and the pointwise magnitude is preserved
alpha = FormField(1, g, G)
starred = hodge_star(ctx, alpha)
twice = hodge_star(ctx, starred)
print(f"star star + identity on 1-forms: {np.abs(twice.values + G).max():.2e}")
mags = np.linalg.norm(starred.values, axis=1) - np.linalg.norm(G, axis=1)
print(f"magnitude preservation: {np.abs(mags).max():.2e}")

# d after d vanishes up to hyperinterpolation round-off
f = np.exp(z)
ddf = exterior_derivative(ctx, exterior_derivative(ctx, FormField(0, g, f)))
print(f"||d d exp(z)|| (weighted): "
      f"{np.sqrt(np.sum(g.weights * ddf.values**2)):.2e}")

# delta d acts as +n(n+1) on degree-n harmonics; the scalar Laplacian
# chain therefore has the classical spectrum -n(n+1)
print("\nsphere spectrum through the operator chain:")
for n, m in ((1, 0), (3, 2), (6, -4)):
    col = op.basis[:, index_map(n, m) - 1]
    dd = codifferential(ctx, exterior_derivative(ctx, FormField(0, g, col)))
    lam = np.sum(g.weights * dd.values * col)
    print(f"  delta d Y({n},{m}): {lam:10.6f}   exact n(n+1) = {n * (n + 1)}")
lap = laplacian_scalar(ctx, op.basis[:, index_map(2, 1) - 1])
print(f"laplacian eigenvalue for degree 2: "
      f"{np.sum(g.weights * lap * op.basis[:, index_map(2, 1) - 1]):.6f} (exact -6)")
