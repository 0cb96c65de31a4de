"""Command-line front end.

Exit codes: 0 success, 2 input error, 3 infeasible instance. Every run writes
its outputs plus a ``manifest.json`` into ``--out-dir``.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import platform
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from taxitomo import __version__
from taxitomo.bisection import bisect_exact, bisect_stochastic
from taxitomo.discrete import (
    format_matrix,
    format_pgm,
    format_trace,
    lav_fill,
    read_sums,
    reconstruct,
)
from taxitomo.distmean import coordinate_xray, write_profile_csv
from taxitomo.geometry import InvalidInput, SeededRng, read_polygon, sample_uniform
from taxitomo.gridrecon import GridSet, greedy_reconstruct, read_step_xray
from taxitomo.render import gridset_svg, trajectory_svg

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INFEASIBLE = 3


@dataclass
class RunConfig:
    subcommand: str
    inputs: list[str]
    out_dir: str
    seed: int | None = None
    iterations: int | None = None
    resolution: int | None = None
    mode: str | None = None
    flags: dict = field(default_factory=dict)


def _fmt(v: float) -> str:
    return f"{float(v):.12g}"


def _sha256(path: str) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _write(out_dir: Path, name: str, text: str, outputs: list[str]) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / name).write_text(text)
    outputs.append(name)


def _manifest(cfg: RunConfig, outputs: list[str], extra: dict | None = None) -> None:
    out_dir = Path(cfg.out_dir)
    data = {
        "config": asdict(cfg),
        "input_sha256": {p: _sha256(p) for p in cfg.inputs},
        "outputs": outputs,
        "versions": {"taxitomo": __version__, "python": platform.python_version(), "numpy": np.__version__},
    }
    if extra:
        data.update(extra)
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "manifest.json").write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")


def cmd_sample(args) -> int:
    p = read_polygon(args.polygon)
    cfg = RunConfig("sample", [args.polygon], args.out_dir, seed=args.seed, flags={"count": args.count})
    pts = sample_uniform(p, args.count, SeededRng(args.seed))
    lines = ["x,y"] + [f"{x!r},{y!r}" for x, y in pts.tolist()]
    outputs: list[str] = []
    _write(Path(args.out_dir), "points.csv", "\n".join(lines) + "\n", outputs)
    _manifest(cfg, outputs)
    print(Path(args.out_dir) / "points.csv")
    return EXIT_OK


def cmd_bisect(args) -> int:
    p = read_polygon(args.polygon)
    out_dir = Path(args.out_dir)
    outputs: list[str] = []
    if args.exact:
        cfg = RunConfig("bisect", [args.polygon], args.out_dir, flags={"exact": True})
        pt = bisect_exact(p)
        _write(out_dir, "point.txt", f"{_fmt(pt[0])} {_fmt(pt[1])}\n", outputs)
        _manifest(cfg, outputs)
        print(f"{_fmt(pt[0])} {_fmt(pt[1])}")
        return EXIT_OK
    cfg = RunConfig("bisect", [args.polygon], args.out_dir, seed=args.seed,
                    iterations=args.iterations, flags={"start": args.start})
    start = None
    if args.start == "centroid":
        start = p.as_array().mean(axis=0)
    run = bisect_stochastic(p, args.iterations, SeededRng(args.seed), start=start)
    lines = ["k,x,y"] + [f"{k},{x!r},{y!r}" for k, (x, y) in enumerate(run.trajectory.tolist())]
    _write(out_dir, "trajectory.csv", "\n".join(lines) + "\n", outputs)
    _write(out_dir, "trajectory.svg", trajectory_svg(p, run.trajectory, args.svg_points), outputs)
    fx, fy = run.final_point
    _write(out_dir, "point.txt", f"{_fmt(fx)} {_fmt(fy)}\n", outputs)
    _manifest(cfg, outputs)
    print(f"{_fmt(fx)} {_fmt(fy)}")
    return EXIT_OK


def cmd_recon_discrete(args) -> int:
    sums = read_sums(args.sums)
    cfg = RunConfig("recon-discrete", [args.sums], args.out_dir,
                    flags={"trace": args.trace, "init": args.init, "method": args.method})
    sums.require_compatible()
    out_dir = Path(args.out_dir)
    outputs: list[str] = []
    if args.trace:
        events: list = []
        lav_fill(sums, events)
        _write(out_dir, "trace.txt", format_trace(events), outputs)
    result = reconstruct(sums, init=args.init, method=args.method)
    extra = {"feasible": result.feasible, "flow_size": result.flow_size,
             "target": sums.total, "augmentations": result.augmentations}
    if not result.feasible:
        _manifest(cfg, outputs, extra)
        print(f"infeasible: maximal flow {result.flow_size} < {sums.total}")
        return EXIT_INFEASIBLE
    _write(out_dir, "matrix.txt", format_matrix(result.matrix), outputs)
    _write(out_dir, "matrix.pgm", format_pgm(result.matrix), outputs)
    _manifest(cfg, outputs, extra)
    sys.stdout.write(format_matrix(result.matrix))
    return EXIT_OK


def cmd_recon_grid(args) -> int:
    x1 = read_step_xray(args.xray1)
    x2 = read_step_xray(args.xray2)
    cfg = RunConfig("recon-grid", [args.xray1, args.xray2], args.out_dir,
                    resolution=args.resolution, mode=args.mode)
    res = greedy_reconstruct(x1, x2, args.resolution, args.mode)
    out_dir = Path(args.out_dir)
    outputs: list[str] = []
    text = "\n".join(res.gridset.rows()) + "\n"
    _write(out_dir, "gridset.txt", text, outputs)
    _write(out_dir, "gridset.svg", gridset_svg(res.gridset, res.grid), outputs)
    _manifest(cfg, outputs, {"box": list(res.grid.box), "objective": res.objective,
                             "deletions": len(res.deleted)})
    sys.stdout.write(text)
    return EXIT_OK


def cmd_xray(args) -> int:
    p = read_polygon(args.polygon)
    cfg = RunConfig("xray", [args.polygon], args.out_dir)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    outputs = []
    for axis in (1, 2):
        name = f"xray{axis}.csv"
        write_profile_csv(coordinate_xray(p, axis), out_dir / name)
        outputs.append(name)
    _manifest(cfg, outputs)
    for name in outputs:
        print(out_dir / name)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="taxitomo", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--out-dir", default=".", help="directory for outputs and manifest.json")

    sp = sub.add_parser("sample", help="uniform random points in a polygon")
    sp.add_argument("polygon")
    sp.add_argument("--count", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    common(sp)
    sp.set_defaults(func=cmd_sample)

    sp = sub.add_parser("bisect", help="bisection point of a polygon")
    sp.add_argument("polygon")
    sp.add_argument("--iterations", type=int, default=100_000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--exact", action="store_true", help="deterministic per-axis area median")
    sp.add_argument("--start", choices=("sample", "centroid"), default="sample",
                    help="starting point: first uniform sample (default) or vertex centroid")
    sp.add_argument("--svg-points", type=int, default=200, help="iterates drawn in trajectory.svg")
    common(sp)
    sp.set_defaults(func=cmd_bisect)

    sp = sub.add_parser("recon-discrete", help="binary matrix from row and column sums")
    sp.add_argument("sums")
    sp.add_argument("--trace", action="store_true", help="write trace.txt of the LAV fill")
    sp.add_argument("--init", choices=("lav", "zero"), default="lav")
    sp.add_argument("--method", choices=("flow", "chains"), default="flow")
    common(sp)
    sp.set_defaults(func=cmd_recon_discrete)

    sp = sub.add_parser("recon-grid", help="hv-convex grid set from two step X-rays")
    sp.add_argument("xray1")
    sp.add_argument("xray2")
    sp.add_argument("--resolution", "-n", type=int, default=8)
    sp.add_argument("--mode", choices=("greedy", "antigreedy"), default="greedy")
    common(sp)
    sp.set_defaults(func=cmd_recon_grid)

    sp = sub.add_parser("xray", help="coordinate X-ray profiles of a polygon")
    sp.add_argument("polygon")
    common(sp)
    sp.set_defaults(func=cmd_xray)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidInput, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
