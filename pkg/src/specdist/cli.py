"""Command-line front end.

Scalars go to stdout as JSON, sequences as CSV, diagnostics to stderr.  Every
float is printed with 17 significant digits.  Bad input exits with status 2,
numerical failures with status 1.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import hashlib
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import closed_forms as cf
from . import graph as gr
from .evolve import OPERATIONS, ba_trajectory, spearman_rho, trajectories_to_dat
from .interlace import check_interlacing, contract_edge, contract_vertices, d1_bound, delete_edge, delete_subgraph
from .measure import from_spectrum, measure_to_csv, spectral_distance, wasserstein
from .spectral import (
    SpectrumError,
    exhaustion_measures,
    expected_spectral_measure,
    get_family,
    rooted_spectral_measure,
    spectrum,
    spectrum_to_csv,
)


class UsageError(Exception):
    pass


def fmt(x: float) -> str:
    return f"{x:.17g}"


def to_json(obj) -> str:
    """JSON with floats at 17 significant digits."""
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        return fmt(x) if math.isfinite(x) else "null"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {to_json(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(to_json(v) for v in obj) + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _load(path) -> gr.WeightedGraph:
    try:
        return gr.read_graph(path)
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None
    except gr.GraphFormatError as exc:
        raise UsageError(f"{path}: {exc}") from None


# --- commands ----------------------------------------------------------------

def cmd_spectrum(args, out):
    out.write(spectrum_to_csv(spectrum(_load(args.graph))))


def cmd_dist(args, out):
    if not args.p >= 1:
        raise UsageError("--p must be >= 1")
    d = spectral_distance(args.p, _load(args.graph_a), _load(args.graph_b))
    out.write(to_json({"p": args.p, "d": d}) + "\n")


def _family_rows(family: str, sizes: list[int]):
    if family in ("complete", "bipartite"):
        if len(sizes) < 2:
            raise UsageError(f"{family} needs at least two sizes")
        pairs = list(zip(sizes, sizes[1:]))
    else:
        pairs = [(s, s + 1) for s in sizes]
    for a, b in pairs:
        try:
            if family == "complete":
                lo, hi = sorted((a, b))
                oracle = cf.d1_complete_pair(lo, hi)
                g, h = gr.complete(a), gr.complete(b)
            elif family == "bipartite":
                lo, hi = sorted((a, b))
                oracle = cf.d1_bipartite_pair(lo, hi)
                g = gr.complete_bipartite((a + 1) // 2, a // 2)
                h = gr.complete_bipartite((b + 1) // 2, b // 2)
            elif family == "cube":
                oracle = cf.d1_cube_pair(a)
                g, h = gr.hypercube(a), gr.hypercube(b)
            elif family == "path":
                oracle = cf.d1_path_pair(a)
                g, h = gr.path_graph(a), gr.path_graph(b)
            else:
                oracle = cf.d1_cycle_pair(a)
                g, h = gr.cycle_graph(a), gr.cycle_graph(b)
        except ValueError as exc:
            raise UsageError(f"unsupported size for {family}: {exc}") from None
        pipeline = spectral_distance(1, g, h)
        yield {"family": family, "a": a, "b": b, "oracle": oracle, "pipeline": pipeline,
               "absdiff": abs(oracle - pipeline)}


def cmd_family(args, out):
    rows = list(_family_rows(args.family, args.sizes))
    if args.format == "json":
        out.write(to_json(rows) + "\n")
        return
    out.write("family,a,b,oracle,pipeline,absdiff\n")
    for r in rows:
        out.write(f"{r['family']},{r['a']},{r['b']},{fmt(r['oracle'])},{fmt(r['pipeline'])},{fmt(r['absdiff'])}\n")


def cmd_bound(args, out):
    g = _load(args.graph)
    try:
        if args.op == "delete-subgraph":
            if len(args.args) != 1:
                raise UsageError("delete-subgraph takes one subgraph file")
            h, params = delete_subgraph(g, _load(args.args[0]))
        else:
            if len(args.args) != 2:
                raise UsageError(f"{args.op} takes two vertices")
            try:
                u, v = (int(a) for a in args.args)
            except ValueError:
                raise UsageError("vertices must be integers") from None
            op = {"delete-edge": delete_edge, "contract-vertices": contract_vertices,
                  "contract-edge": contract_edge}[args.op]
            h, params = op(g, u, v)
    except (ValueError, IndexError) as exc:
        raise UsageError(f"{args.op} rejected: {exc}") from None
    lam, lam2 = spectrum(g), spectrum(h)
    report = check_interlacing(lam, lam2, params)
    bound = d1_bound(params, g.n)
    d1 = wasserstein(1, from_spectrum(lam), from_spectrum(lam2))
    out.write(to_json({
        "op": args.op, "k1": params.k1, "k2": params.k2, "j": params.j, "n": g.n, "n_after": h.n,
        "bound": bound, "d1": d1, "within_bound": d1 <= bound + 1e-9,
        "interlacing": "pass" if report.passed else "fail",
        "violations": len(report.violations), "boundary": len(report.boundary),
    }) + "\n")


def cmd_rooted(args, out):
    g = _load(args.graph)
    try:
        m = expected_spectral_measure(g, "uniform") if args.uniform else rooted_spectral_measure(g, args.root)
    except (ValueError, IndexError) as exc:
        raise UsageError(str(exc)) from None
    out.write(measure_to_csv(m))


def cmd_exhaust(args, out):
    try:
        fam = get_family(args.family)
        measures = exhaustion_measures(fam, args.sizes)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    outdir = Path(args.out_dir)
    outdir.mkdir(parents=True, exist_ok=True)
    for n, m in zip(args.sizes, measures):
        (outdir / f"measure_{fam.name}_{n}.csv").write_text(measure_to_csv(m))
    out.write("n_a,n_b,d1\n")
    for (a, ma), (b, mb) in zip(zip(args.sizes, measures), zip(args.sizes[1:], measures[1:])):
        out.write(f"{a},{b},{fmt(wasserstein(1, ma, mb))}\n")


def cmd_evolve(args, out):
    n = 1000 if args.full_scale else args.n
    ops = OPERATIONS if args.op == "both" else (args.op,)
    seeds = args.seed or [0]
    if args.steps < 0 or args.sample_every < 1 or not 0 <= args.p_keep <= 1:
        raise UsageError("need --steps >= 0, --sample-every >= 1 and 0 <= --p-keep <= 1")
    if not args.seed_size >= args.m >= 1 or n < args.seed_size:
        raise UsageError("need --seed-size >= --m >= 1 and --n >= --seed-size")
    outdir = Path(args.out_dir)
    outdir.mkdir(parents=True, exist_ok=True)
    runs = {op: [] for op in ops}
    summaries = []
    for op in ops:
        for s in seeds:
            print(f"evolve {op} seed={s} n={n} steps={args.steps}", file=sys.stderr)
            t = ba_trajectory(op, n=n, steps=args.steps, sample_every=args.sample_every, seed=s,
                              m=args.m, seed_size=args.seed_size, p_keep=args.p_keep)
            (outdir / f"{op}_seed{s}.csv").write_text(t.to_csv())
            runs[op].append(t)
            summary = t.summary()
            summary["saturated_steps"] = len(t.saturated_steps)
            summaries.append(summary)
    if args.op == "both":
        (outdir / "curves.dat").write_text(trajectories_to_dat(runs["rewire"], runs["dupdiv"]))
    result = {"trajectories": summaries,
              "mean_rho": {op: float(np.mean([spearman_rho(t) for t in ts])) for op, ts in runs.items()}}
    out.write(to_json(result) + "\n")


def _pair_distance(job):
    p, mu, nu = job
    return wasserstein(p, mu, nu)


def cmd_batch(args, out):
    if not args.p >= 1:
        raise UsageError("--p must be >= 1")
    root = Path(args.directory)
    if not root.is_dir():
        raise UsageError(f"{root} is not a directory")
    files = sorted(f for f in root.iterdir() if f.is_file() and not f.name.startswith("."))
    # one spectrum per distinct file content
    keys, cache = [], {}
    for f in files:
        data = f.read_bytes()
        key = hashlib.sha256(data).hexdigest()
        if key not in cache:
            try:
                g = gr.from_edge_list(data.decode("utf-8"))
            except (gr.GraphFormatError, UnicodeDecodeError) as exc:
                raise UsageError(f"{f}: {exc}") from None
            cache[key] = from_spectrum(spectrum(g))
        keys.append(key)
    k = len(files)
    pairs = [(i, j) for i in range(k) for j in range(i + 1, k)]
    jobs = [(args.p, cache[keys[i]], cache[keys[j]]) for i, j in pairs]
    if args.parallel > 1 and jobs:
        with concurrent.futures.ProcessPoolExecutor(max_workers=args.parallel) as pool:
            values = list(pool.map(_pair_distance, jobs, chunksize=max(1, len(jobs) // (4 * args.parallel))))
    else:
        values = [_pair_distance(job) for job in jobs]
    mat = np.zeros((k, k))
    for (i, j), d in zip(pairs, values):
        mat[i, j] = mat[j, i] = d
    names = [f.name for f in files]
    if args.format == "json":
        out.write(to_json({
            "p": args.p, "files": names, "matrix": mat.tolist(),
            "pairs": [{"a": names[i], "b": names[j], "p": args.p, "d": d,
                       "n_mu": len(cache[keys[i]]), "n_nu": len(cache[keys[j]])}
                      for (i, j), d in zip(pairs, values)],
        }) + "\n")
        return
    if not k:
        return
    out.write("," + ",".join(names) + "\n")
    for name, row in zip(names, mat):
        out.write(name + "," + ",".join(fmt(x) for x in row) + "\n")


# --- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="specdist", description="Spectral distances between graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="normalized Laplacian eigenvalues, one per line")
    p.add_argument("graph")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("dist", help="spectral distance d_p between two graphs")
    p.add_argument("graph_a")
    p.add_argument("graph_b")
    p.add_argument("--p", type=float, default=1.0)
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("family", help="closed-form d_1 next to the eigensolver value")
    p.add_argument("family", choices=["complete", "bipartite", "cube", "path", "cycle"])
    p.add_argument("sizes", type=int, nargs="+")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("bound", help="apply an edit and compare d_1 with the interlacing bound")
    p.add_argument("op", choices=["delete-edge", "delete-subgraph", "contract-vertices", "contract-edge"])
    p.add_argument("graph")
    p.add_argument("args", nargs="*")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("rooted", help="rooted or uniformly rooted spectral measure")
    p.add_argument("graph")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--root", type=int)
    grp.add_argument("--uniform", action="store_true")
    p.set_defaults(func=cmd_rooted)

    p = sub.add_parser("exhaust", help="Dirichlet measures of nested segments of Z or N")
    p.add_argument("family", choices=["Z", "N"])
    p.add_argument("sizes", type=int, nargs="+")
    p.add_argument("--out-dir", default=".")
    p.set_defaults(func=cmd_exhaust)

    p = sub.add_parser("evolve", help="evolve a Barabási–Albert graph and track d_1 to the start")
    p.add_argument("op", choices=[*OPERATIONS, "both"])
    p.add_argument("--n", type=int, default=300)
    p.add_argument("--full-scale", action="store_true", help="use n = 1000")
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--seed-size", type=int, default=10)
    p.add_argument("--steps", type=int, default=200)
    p.add_argument("--sample-every", type=int, default=10)
    p.add_argument("--seed", type=int, action="append", help="repeat for several trajectories")
    p.add_argument("--p-keep", type=float, default=0.5)
    p.add_argument("--out-dir", default=".")
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("batch", help="pairwise distance matrix over a directory of edge lists")
    p.add_argument("directory")
    p.add_argument("--p", type=float, default=1.0)
    p.add_argument("--parallel", type=int, default=1)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_batch)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        args.func(args, out)
    except UsageError as exc:
        print(f"specdist {args.command}: {exc}", file=sys.stderr)
        return 2
    except SpectrumError as exc:
        print(f"specdist {args.command}: {exc}", file=sys.stderr)
        return 1
    return 0


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
