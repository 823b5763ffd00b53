"""Command-line driver: grids, projections, geometry reports, and the
convergence studies (Hodge star, exterior derivative, Laplace-Beltrami).

Outputs are deterministic CSV files (plus minimal hand-rolled SVG line
charts); sweeps run in worker threads but rows are assembled in a fixed
order.  Exit codes: 0 success, 2 configuration error, 3 missing golden
data, 4 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from . import excalc, forms, geometry, hyperinterp, lebedev, pde, reference
from .errors import GoldenDataError, NearSingularError, UnsupportedGridError
from .forms import FormField

R0_MAX = 0.4


class ConfigError(ValueError):
    pass


_context_cache: dict = {}


def build_context(preset: str, r0: float, node_count: int) -> excalc.OperatorContext:
    """Geometry + projector for one manifold and grid, cached per process."""
    key = (preset, round(float(r0), 12), node_count)
    if key not in _context_cache:
        grid = lebedev.grid(node_count)
        op = hyperinterp.ProjectionOperator(grid)
        shape = geometry.RadialShape.from_preset(preset, r0, op)
        geom = geometry.build(shape, grid, op)
        _context_cache[key] = excalc.OperatorContext(geom, op)
    return _context_cache[key]


def _filtered(op: hyperinterp.ProjectionOperator, samples: np.ndarray) -> np.ndarray:
    """Node values of the hyperinterpolant (the band-limited representation)."""
    if samples.ndim == 1:
        return op.basis @ op.project(samples).coeffs
    return op.basis @ op.project_columns(samples)


def star_errors(preset: str, r0: float, node_count: int) -> tuple[float, float]:
    """Relative error of the numerical star against closed forms (k = 0, 1)."""
    ctx = build_context(preset, r0, node_count)
    grid, op, geom = ctx.grid, ctx.projector, ctx.geometry
    f, w_exact = reference.star0_fields(preset, r0, grid)
    starf = excalc.hodge_star(ctx, FormField(0, grid, _filtered(op, f)))
    e0 = pde.relative_error(forms.chart_coefficient(starf, geom), w_exact, grid)
    v, v_star = reference.star1_fields(preset, r0, grid)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", forms.TangencyWarning)
        alpha = forms.flat(geom, _filtered(op, v))
    e1 = pde.relative_error(excalc.hodge_star(ctx, alpha).values, v_star, grid)
    return e0, e1


def _load_case_golden(case: str, preset: str, r0: float, grid, golden) -> dict:
    path = pde.golden_path(pde.golden_dir(golden), case, preset, r0, grid.node_count)
    return pde.load_golden(path, preset, r0, grid)


def d_errors(preset: str, r0: float, node_count: int, golden=None) -> tuple[float, float]:
    """Relative error of the numerical d on the two test forms (k = 0, 1)."""
    ctx = build_context(preset, r0, node_count)
    grid, geom = ctx.grid, ctx.geometry
    f, _ = reference.d0_fields(preset, r0, grid)
    v1, _ = reference.d1_fields(preset, r0, grid)
    if preset == "sphere" or r0 == 0.0:
        _, df_exact = reference.d0_fields(preset, r0, grid)
        _, dual_exact = reference.d1_fields(preset, r0, grid)
    else:
        df_exact = np.asarray(
            _load_case_golden("d0-exp", preset, r0, grid, golden)["exact_sharp"])
        dual_exact = np.asarray(
            _load_case_golden("d1-gexp", preset, r0, grid, golden)["exact_dual"])
    df = excalc.exterior_derivative(ctx, FormField(0, grid, f))
    e0 = pde.relative_error(df.values, df_exact, grid)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", forms.TangencyWarning)
        alpha = forms.flat(geom, v1)
    d1 = excalc.exterior_derivative(ctx, alpha)
    e1 = pde.relative_error(d1.values, dual_exact, grid)
    return e0, e1


def lb_error(preset: str, r0: float, node_count: int, golden=None,
             dump_to: Path | None = None) -> float:
    """Relative solution error of the Laplace-Beltrami solve."""
    ctx = build_context(preset, r0, node_count)
    system = pde.assemble(ctx, pde.laplace_beltrami_chain())
    case = pde.manufactured_case(preset, r0, "exp-poly", ctx.grid, golden=golden,
                                 op=ctx.projector)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        err = pde.solution_error(system, case)
        if dump_to is not None:
            uhat = pde.solve(system, case.g)
            u_num = ctx.projector.basis @ uhat.coeffs
            mean = lebedev.inner_product_Q(case.u, ctx.projector.basis[:, 0], ctx.grid)
            u_ref = case.u - mean * ctx.projector.basis[:, 0]
            with open(dump_to, "w") as fh:
                fh.write("node,u_exact,u_numeric,abs_error\n")
                for l in range(ctx.grid.node_count):
                    fh.write(f"{l},{u_ref[l]:.17g},{u_num[l]:.17g},"
                             f"{abs(u_num[l] - u_ref[l]):.17g}\n")
    return err


def _write_rows(path: Path, rows) -> None:
    with open(path, "w") as f:
        f.write("nodes,N,r0,rel_error\n")
        for n, N, r0, err in rows:
            f.write(f"{n},{N},{r0:.17g},{err:.17g}\n")


def _write_svg(path: Path, rows, title: str) -> None:
    """Minimal semilog-y line chart: one polyline per r0."""
    groups: dict[float, list] = {}
    for n, _, r0, err in rows:
        groups.setdefault(r0, []).append((n, max(err, 1e-300)))
    width, height, margin = 640, 420, 60
    xs = sorted({n for n, *_ in rows})
    ys = [np.log10(e) for g in groups.values() for _, e in g]
    ymin, ymax = min(ys) - 0.5, max(ys) + 0.5
    xmin, xmax = min(xs), max(xs)

    def px(n):
        return margin + (width - 2 * margin) * (n - xmin) / max(xmax - xmin, 1)

    def py(e):
        return height - margin - (height - 2 * margin) * (np.log10(e) - ymin) / (ymax - ymin)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">',
        f'<text x="{width // 2}" y="20" text-anchor="middle" font-size="14">{title}</text>',
        f'<line x1="{margin}" y1="{height - margin}" x2="{width - margin}" '
        f'y2="{height - margin}" stroke="black"/>',
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" y2="{height - margin}" '
        f'stroke="black"/>',
        f'<text x="{width // 2}" y="{height - 15}" text-anchor="middle" '
        f'font-size="12">Lebedev nodes</text>',
        f'<text x="15" y="{height // 2}" font-size="12" transform="rotate(-90 15 '
        f'{height // 2})" text-anchor="middle">log10 relative error</text>',
    ]
    for n in xs:
        parts.append(f'<text x="{px(n):.1f}" y="{height - margin + 18}" '
                     f'text-anchor="middle" font-size="11">{n}</text>')
    k = int(np.floor(ymin))
    while k <= ymax:
        if ymin <= k <= ymax:
            parts.append(f'<text x="{margin - 8}" y="{py(10.0 ** k):.1f}" '
                         f'text-anchor="end" font-size="11">{k}</text>')
        k += 1
    palette = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"]
    for idx, (r0, pts) in enumerate(sorted(groups.items())):
        color = palette[idx % len(palette)]
        coords = " ".join(f"{px(n):.1f},{py(e):.1f}" for n, e in sorted(pts))
        parts.append(f'<polyline points="{coords}" fill="none" stroke="{color}" '
                     f'stroke-width="1.5"/>')
        parts.append(f'<text x="{width - margin + 5}" y="{margin + 16 * idx + 10}" '
                     f'font-size="11" fill="{color}">r0={r0:g}</text>')
    parts.append("</svg>")
    Path(path).write_text("\n".join(parts) + "\n")


def _sweep(fn, combos, workers: int):
    """Evaluate fn over (r0, nodes) combos in parallel, deterministic order."""
    if workers <= 1:
        return [fn(r0, n) for r0, n in combos]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(fn, r0, n) for r0, n in combos]
        return [f.result() for f in futures]


def _parse_common(args) -> tuple[str, list[float], list[int], Path]:
    preset = args.manifold
    r0s = [float(s) for s in str(args.r0).split(",") if s != ""]
    for r0 in r0s:
        if not 0.0 <= r0 <= R0_MAX:
            raise ConfigError(f"r0={r0} outside the supported range [0, {R0_MAX}]")
    nodes = [int(s) for s in args.nodes.split(",") if s]
    for n in nodes:
        if n not in lebedev.supported_counts():
            raise ConfigError(
                f"unsupported node count {n}; supported: "
                f"{', '.join(map(str, lebedev.supported_counts()))}"
            )
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    return preset, r0s, nodes, out


def _cmd_grid(args) -> int:
    nodes = [int(s) for s in args.nodes.split(",") if s]
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for n in nodes:
        g = lebedev.grid(n)
        path = out / f"grid_{n}.csv"
        lebedev.dump_csv(g, path)
        print(f"wrote {path} (precision {g.precision}, max degree {g.max_degree})")
    return 0


_PROJECT_FIELDS = {
    "exp-z": lambda b: np.exp(b["z"]),
    "exp-poly-u": lambda b: np.exp(b["y"]) / (3.0 - b["z"]) ** 4,
    "star0-f": lambda b: np.exp(b["z"]) / (3.0 - b["y"]),
}


def _cmd_project(args) -> int:
    preset, r0s, nodes, out = _parse_common(args)
    if len(r0s) != 1 or len(nodes) != 1:
        raise ConfigError("project takes a single --r0 and a single node count")
    grid = lebedev.grid(nodes[0])
    bundle = reference.exact_bundle(preset, r0s[0], grid.theta, grid.phi)
    samples = _PROJECT_FIELDS[args.field](bundle)
    ctx = build_context(preset, r0s[0], nodes[0])
    field = ctx.projector.project(samples)
    path = out / f"coeffs_{args.field}_{preset}_r{r0s[0]:.2f}_n{nodes[0]}.csv"
    hyperinterp.save_coeffs_csv(field, path)
    print(f"wrote {path}")
    return 0


def _cmd_report_geometry(args) -> int:
    preset, r0s, nodes, out = _parse_common(args)
    if len(r0s) != 1 or len(nodes) != 1:
        raise ConfigError("report-geometry takes a single --r0 and node count")
    ctx = build_context(preset, r0s[0], nodes[0])
    geom, grid = ctx.geometry, ctx.grid
    path = out / f"geometry_{preset}_r{r0s[0]:.2f}_n{nodes[0]}.csv"
    with open(path, "w") as f:
        f.write("node,chart,x,y,z,sqrt_g,K\n")
        for l in range(grid.node_count):
            f.write(
                f"{l},{'AB'[int(geom.chart[l])]},"
                f"{geom.x[l, 0]:.17g},{geom.x[l, 1]:.17g},{geom.x[l, 2]:.17g},"
                f"{geom.sqrt_g[l]:.17g},{geom.K[l]:.17g}\n"
            )
    area = lebedev.surface_integral(np.ones(grid.node_count), grid, geom)
    total_k = lebedev.surface_integral(geom.K, grid, geom)
    summary = {"area": area, "int_K_dA": total_k, "four_pi": 4.0 * np.pi}
    (out / f"geometry_{preset}_r{r0s[0]:.2f}_n{nodes[0]}_summary.json").write_text(
        json.dumps(summary, indent=1))
    print(f"wrote {path}")
    print(f"area = {area:.12g}, int K dA = {total_k:.12g} (4 pi = {4 * np.pi:.12g})")
    return 0


def _cmd_conv_star(args) -> int:
    preset, r0s, nodes, out = _parse_common(args)
    combos = [(r0, n) for r0 in r0s for n in nodes]
    results = _sweep(lambda r0, n: star_errors(preset, r0, n), combos, args.workers)
    for k in (0, 1):
        rows = [(n, lebedev.grid(n).max_degree, r0, res[k])
                for (r0, n), res in zip(combos, results)]
        _write_rows(out / f"conv_star_k{k}.csv", rows)
        if args.format == "csv+svg":
            _write_svg(out / f"conv_star_k{k}.svg", rows,
                       f"hodge star on {k}-forms, {preset}")
    print(f"wrote conv_star_k0.csv, conv_star_k1.csv in {out}")
    return 0


def _cmd_conv_d(args) -> int:
    preset, r0s, nodes, out = _parse_common(args)
    combos = [(r0, n) for r0 in r0s for n in nodes]
    results = _sweep(lambda r0, n: d_errors(preset, r0, n, args.golden),
                     combos, args.workers)
    for k in (0, 1):
        rows = [(n, lebedev.grid(n).max_degree, r0, res[k])
                for (r0, n), res in zip(combos, results)]
        _write_rows(out / f"conv_d_k{k}.csv", rows)
        if args.format == "csv+svg":
            _write_svg(out / f"conv_d_k{k}.svg", rows,
                       f"exterior derivative on {k}-forms, {preset}")
    print(f"wrote conv_d_k0.csv, conv_d_k1.csv in {out}")
    return 0


def _cmd_solve_lb(args) -> int:
    preset, r0s, nodes, out = _parse_common(args)
    combos = [(r0, n) for r0 in r0s for n in nodes]

    def one(r0, n):
        dump = None
        if args.dump:
            dump = out / f"solve_lb_nodes_{preset}_r{r0:.2f}_n{n}.csv"
        return lb_error(preset, r0, n, golden=args.golden, dump_to=dump)

    results = _sweep(one, combos, args.workers)
    rows = [(n, lebedev.grid(n).max_degree, r0, err)
            for (r0, n), err in zip(combos, results)]
    _write_rows(out / "solve_lb.csv", rows)
    if args.format == "csv+svg":
        _write_svg(out / "solve_lb.svg", rows, f"Laplace-Beltrami solve, {preset}")
    print(f"wrote solve_lb.csv in {out}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="radialdec", description="exterior calculus on radial manifolds")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("grid", help="dump Lebedev grids as CSV")
    g.add_argument("--nodes", required=True)
    g.add_argument("--out", required=True)
    g.set_defaults(fn=_cmd_grid)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--manifold", choices=("sphere", "dimple", "fountain"),
                        required=True)
    common.add_argument("--r0", default="0.0",
                        help="amplitude, or comma list for sweeps")
    common.add_argument("--nodes", required=True, help="comma list of node counts")
    common.add_argument("--out", required=True)
    common.add_argument("--golden", default=None,
                        help=f"golden data directory (default ${pde.GOLDEN_ENV})")
    common.add_argument("--format", choices=("csv", "csv+svg"), default="csv")
    common.add_argument("--workers", type=int, default=4)

    p = sub.add_parser("project", parents=[common],
                       help="project a test field, write (n, m, coeff) CSV")
    p.add_argument("--field", choices=sorted(_PROJECT_FIELDS), default="exp-z")
    p.set_defaults(fn=_cmd_project)

    rg = sub.add_parser("report-geometry", parents=[common],
                        help="per-node geometry CSV plus area / total curvature")
    rg.set_defaults(fn=_cmd_report_geometry)

    cs = sub.add_parser("conv-star", parents=[common],
                        help="Hodge star convergence study")
    cs.set_defaults(fn=_cmd_conv_star)

    cd = sub.add_parser("conv-d", parents=[common],
                        help="exterior derivative convergence study")
    cd.set_defaults(fn=_cmd_conv_d)

    sl = sub.add_parser("solve-lb", parents=[common],
                        help="Laplace-Beltrami manufactured-solution study")
    sl.add_argument("--dump", action="store_true",
                    help="also write per-node solution/error CSVs")
    sl.set_defaults(fn=_cmd_solve_lb)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (ConfigError, UnsupportedGridError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GoldenDataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (NearSingularError, np.linalg.LinAlgError, FloatingPointError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
