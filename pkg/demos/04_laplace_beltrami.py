"""Solving the Laplace-Beltrami equation on deformed manifolds.

Assembles the Galerkin system from the composed numerical operators and
solves the manufactured problem u = exp(y)/(3-z)^4, comparing against the
committed symbolic source data.  Expect spectral decay of the error for
the dimple; the sphere case converges fastest.
"""

import warnings

import numpy as np

from radialdec import pde
from radialdec.cli import build_context

warnings.simplefilter("ignore")

print("relative solution error, manufactured Laplace-Beltrami problem")
print(f"{'nodes':>6} {'sphere':>12} {'dimple r0=0.2':>14} {'dimple r0=0.4':>14}")
for n in (110, 194, 302, 434, 590):
    row = [n]
    for preset, r0 in (("sphere", 0.0), ("dimple", 0.2), ("dimple", 0.4)):
        ctx = build_context(preset, r0, n)
        system = pde.assemble(ctx, pde.laplace_beltrami_chain())
        case = pde.manufactured_case(preset, r0, "exp-poly", ctx.grid,
                                     op=ctx.projector)
        row.append(pde.solution_error(system, case))
    print(f"{row[0]:>6} {row[1]:>12.3e} {row[2]:>14.3e} {row[3]:>14.3e}")

print("\nthe sphere column is limited only by the band limit of the basis;")
print("deformed manifolds add the pullback bandwidth of fields through the")
print("geometry, which is why larger r0 converges more slowly")
