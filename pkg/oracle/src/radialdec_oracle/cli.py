"""Golden-data generator CLI.

Consumes the grid CSV dumped by the main package (guaranteeing node
agreement), evaluates the requested case symbolically at every node, and
writes JSON files carrying an integrity hash over the manifold parameters
and the grid fingerprint.  The hash convention is shared with the consumer
by documentation, not by import: there is no runtime coupling.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

import numpy as np

from .symbolic import PRESETS, CaseEvaluator

GENERATOR_VERSION = 1

# max polynomial degree integrated exactly, per supported node count
PRECISION = {6: 3, 14: 5, 26: 7, 38: 9, 50: 11, 74: 13, 86: 15, 110: 17, 146: 19,
             170: 21, 194: 23, 230: 25, 266: 27, 302: 29, 350: 31, 434: 35,
             590: 41, 770: 47, 974: 53, 1202: 59}

CASES = ("exp-poly", "d0-exp", "d1-gexp")


def grid_fingerprint(csv_text: str) -> str:
    return hashlib.sha256(csv_text.encode()).hexdigest()[:16]


def manifold_hash(preset: str, r0: float, max_degree: int, node_count: int,
                  fingerprint: str) -> str:
    key = (
        f"{preset}|r0={r0:.17g}|maxDegree={max_degree}|nodes={node_count}"
        f"|grid={fingerprint}"
    )
    return hashlib.sha256(key.encode()).hexdigest()[:32]


def load_grid_csv(path: Path):
    text = Path(path).read_text()
    data = np.loadtxt(path, delimiter=",", skiprows=1)
    n = data.shape[0]
    if n not in PRECISION:
        raise SystemExit(f"grid CSV {path} holds {n} nodes, not a supported count")
    return {
        "node_count": n,
        "xyz": data[:, 0:3],
        "theta": data[:, 3],
        "phi": data[:, 4],
        "fingerprint": grid_fingerprint(text),
        "max_degree": PRECISION[n] // 2,
    }


def find_grid_csv(grid_arg: Path, node_count: int) -> Path:
    p = Path(grid_arg)
    if p.is_dir():
        candidate = p / f"grid_{node_count}.csv"
        if not candidate.exists():
            raise SystemExit(f"no grid CSV for {node_count} nodes under {p}")
        return candidate
    return p


def generate(case: str, preset: str, r0: float, nodes: list[int], grid_arg: Path,
             out_dir: Path, verbose: bool = True) -> list[Path]:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    evaluator = CaseEvaluator(case, preset)
    written = []
    for n in nodes:
        t0 = time.time()
        grid = load_grid_csv(find_grid_csv(grid_arg, n))
        if grid["node_count"] != n:
            raise SystemExit(f"grid CSV holds {grid['node_count']} nodes, expected {n}")
        values = evaluator.evaluate(grid["theta"], grid["phi"], r0)
        payload = {
            "manifold": {"preset": preset, "r0": r0, "maxDegree": grid["max_degree"]},
            "nodeCount": n,
            "hash": manifold_hash(preset, r0, grid["max_degree"], n, grid["fingerprint"]),
            "case": case,
            "generator_version": GENERATOR_VERSION,
        }
        for key, arr in values.items():
            payload[key] = arr.tolist()
        path = out_dir / f"{case}_{preset}_r{r0:.2f}_n{n}.json"
        with open(path, "w") as f:
            json.dump(payload, f)
        written.append(path)
        if verbose:
            print(f"wrote {path} ({time.time() - t0:.1f}s)")
    manifest = out_dir / "manifest.json"
    entries = []
    if manifest.exists():
        entries = json.loads(manifest.read_text()).get("files", [])
    names = {e["file"] for e in entries}
    for p in written:
        if p.name not in names:
            entries.append({"file": p.name, "generator_version": GENERATOR_VERSION})
    manifest.write_text(json.dumps(
        {"generator_version": GENERATOR_VERSION, "files": sorted(entries, key=lambda e: e["file"])},
        indent=1))
    return written


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="oracle",
                                     description="golden-data generator")
    sub = parser.add_subparsers(dest="command", required=True)
    gen = sub.add_parser("generate", help="generate golden files for one case")
    gen.add_argument("--case", required=True, choices=CASES)
    gen.add_argument("--manifold", required=True, choices=PRESETS)
    gen.add_argument("--r0", type=float, required=True)
    gen.add_argument("--nodes", required=True,
                     help="comma-separated node counts, e.g. 110,194,302")
    gen.add_argument("--grid-csv", required=True, type=Path,
                     help="grid CSV from the main package, or a directory of them")
    gen.add_argument("--out", required=True, type=Path)
    args = parser.parse_args(argv)
    nodes = [int(s) for s in args.nodes.split(",") if s]
    generate(args.case, args.manifold, args.r0, nodes, args.grid_csv, args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
