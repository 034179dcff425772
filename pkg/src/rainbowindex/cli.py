"""Command-line surface: gen, color, certify, rx, sweep, bounds.

Exit codes: 0 decided/success, 1 undecided or undefined, 2 usage or parse
error. Randomized commands report the effective seed and substream scheme on
stderr so every published number can be re-derived.
"""

from __future__ import annotations

import argparse
import contextlib
import os
import sys
from typing import Optional

from . import bounds as bnd
from .coloring import random_coloring, write_coloring
from .errors import FormatError, ParameterError
from .graph import GNM, GNP, GenSpec, generate, read_edge_list, write_edge_list
from .solver import (MODE_FULL, MODE_STAR, exact_rainbow_index,
                     lower_certificate, serialize_certificate, upper_certificate)
from .sweep import (ALL_CHECKS, CHECK_BAD_SET, CHECK_STAR_CERT, SweepConfig,
                    config_from_coefs, run_sweep, write_sweep_csv)

EXIT_OK = 0
EXIT_UNDECIDED = 1
EXIT_USAGE = 2


@contextlib.contextmanager
def _open_out(path: str):
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="\n") as f:
            yield f


def _read_graph(path: str):
    with open(path) as f:
        return read_edge_list(f)


def _note_seed(seed: int) -> None:
    print(f"seed={seed} rng=philox key=(seed, splitmix64(stream ids)); "
          f"streams: graph=(0,point,trial) color=(1,point,trial,attempt) "
          f"sets=(2,point,trial)", file=sys.stderr)


def _cmd_gen(args) -> int:
    if args.model == GNP:
        if args.p is None or args.M is not None:
            raise ParameterError("gnp takes --p and not --M")
        spec = GenSpec(GNP, args.n, p=args.p, seed=args.seed)
    else:
        if args.M is None or args.p is not None:
            raise ParameterError("gnm takes --M and not --p")
        spec = GenSpec(GNM, args.n, M=args.M, seed=args.seed)
    G = generate(spec)
    _note_seed(args.seed)
    with _open_out(args.out) as f:
        write_edge_list(G, f)
    return EXIT_OK


def _cmd_color(args) -> int:
    G = _read_graph(args.graph)
    c = random_coloring(G, args.t, args.seed)
    _note_seed(args.seed)
    with _open_out(args.out) as f:
        write_coloring(c, f)
    return EXIT_OK


def _cmd_certify(args) -> int:
    G = _read_graph(args.graph)
    mode = args.mode
    if mode is None:
        mode = MODE_STAR if G.n > 12 else MODE_FULL
    lower = lower_certificate(G, args.k)
    if lower is not None:
        with _open_out(args.out) as f:
            f.write(serialize_certificate(lower))
        print(f"verdict: rx >= {args.k + 1}", file=sys.stderr)
        return EXIT_OK
    _note_seed(args.seed)
    upper = upper_certificate(G, args.k, args.ell, attempts=args.attempts,
                              seed=args.seed, mode=mode)
    if upper is not None:
        with _open_out(args.out) as f:
            f.write(serialize_certificate(upper))
        print(f"verdict: rx <= {args.k}", file=sys.stderr)
        return EXIT_OK
    print("verdict: undecided", file=sys.stderr)
    return EXIT_UNDECIDED


def _cmd_rx(args) -> int:
    G = _read_graph(args.graph)
    tmax = args.tmax if args.tmax is not None else max(1, G.m)
    res = exact_rainbow_index(G, args.k, args.ell, t_max=tmax)
    if res.found:
        print(f"rx = {res.t}")
        with _open_out(args.out) as f:
            write_coloring(res.coloring, f)
        return EXIT_OK
    if res.reason and res.reason.startswith("undefined"):
        print(f"rx undefined ({res.reason.split(': ', 1)[1]})")
    else:
        print(f"rx > {tmax} ({res.reason})")
    return EXIT_UNDECIDED


def _parse_grid(text: str) -> tuple:
    try:
        return tuple(float(x) for x in text.split(","))
    except ValueError:
        raise ParameterError(f"bad grid value in {text!r}") from None


def _cmd_sweep(args) -> int:
    checks = frozenset(tok.strip() for tok in args.checks.split(",") if tok.strip())
    if (args.grid is None) == (args.coef_grid is None):
        raise ParameterError("exactly one of --grid / --coef-grid required")
    if args.coef_grid is not None:
        cfg = config_from_coefs(args.n, args.k, args.ell, args.model,
                                _parse_grid(args.coef_grid), args.trials,
                                args.seed, checks, threads=args.threads)
    else:
        grid = _parse_grid(args.grid)
        if args.model == GNM:
            grid = tuple(int(v) for v in grid)
        cfg = SweepConfig(n=args.n, k=args.k, ell=args.ell, mode=args.model,
                          grid=grid, trials=args.trials, seed=args.seed,
                          checks=checks, threads=args.threads)
    _note_seed(args.seed)
    rows = run_sweep(cfg)
    with _open_out(args.out) as f:
        write_sweep_csv(rows, f)
    for r in rows:
        if r.pr_exact is not None:
            print(f"exact: grid={r.grid_value:.6f} pr={r.pr_exact:.6f} "
                  f"se={r.se_exact:.6f}", file=sys.stderr)
    return EXIT_OK


def _bounds_table(args) -> list:
    rows = [
        ("log_base", f"{bnd.threshold_log_base(args.k):.6f}"),
        ("rainbow_star_prob", f"{bnd.rainbow_star_prob(args.k):.6f}"),
    ]
    if args.n is not None:
        rows += [
            ("threshold_p_a", f"{bnd.threshold_p(args.n, args.k, bnd.BASE_A):.6f}"),
            ("threshold_p_ln", f"{bnd.threshold_p(args.n, args.k, bnd.BASE_LN):.6f}"),
            ("threshold_M", f"{bnd.threshold_M(args.n, args.k):.6f}"),
        ]
        try:
            per, union = bnd.chernoff_tail_bound(args.n, args.k, args.c1)
            rows += [("tail_bound_per_set", f"{per:.6e}"),
                     ("tail_bound_union", f"{union:.6e}")]
        except ParameterError as exc:
            rows += [("tail_bound_per_set", f"n/a ({exc})")]
        per, alls = bnd.star_failure_bound(args.n, args.k, args.ell)
        rows += [("star_failure_per_set", f"{per:.6e}"),
                 ("star_failure_all_sets", f"{alls:.6e}")]
        if args.p is not None:
            rows.append(("M_from_p", str(bnd.p_to_M(args.n, args.p, args.x))))
            try:
                e1, e2 = bnd.bad_set_event_probs(args.n, args.k, args.p)
                rows += [("pr_pilot_independent", f"{e1:.6f}"),
                         ("pr_block_no_outside_common", f"{e2:.6f}")]
            except ParameterError as exc:
                rows.append(("pr_pilot_independent", f"n/a ({exc})"))
    return rows


def _cmd_bounds(args) -> int:
    rows = _bounds_table(args)
    with _open_out(args.out) as f:
        if args.format == "csv":
            f.write("name,value\n")
            for name, value in rows:
                f.write(f"{name},{value}\n")
        else:
            for name, value in rows:
                f.write(f"{name} = {value}\n")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rainbowindex",
        description="Rainbow-index certificates, exact values, bounds and sweeps.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=0, help="64-bit master seed")
        p.add_argument("--out", default="-", help="output path, '-' for stdout")

    p = sub.add_parser("gen", help="generate a random graph edge list")
    p.add_argument("--model", choices=[GNP, GNM], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float)
    p.add_argument("--M", type=int)
    common(p)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("color", help="randomly color a graph's edges")
    p.add_argument("graph")
    p.add_argument("--t", type=int, required=True, help="palette size")
    common(p)
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("certify", help="try lower then upper certificates")
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--ell", type=int, default=1)
    p.add_argument("--attempts", type=int, default=20)
    p.add_argument("--mode", choices=[MODE_STAR, MODE_FULL], default=None,
                   help="default: star for n > 12, else full")
    common(p)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("rx", help="exact rainbow index of a small graph")
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--ell", type=int, default=1)
    p.add_argument("--tmax", type=int, default=None,
                   help="largest palette to try (default: edge count)")
    common(p)
    p.set_defaults(func=_cmd_rx)

    p = sub.add_parser("sweep", help="Monte Carlo sweep over a grid")
    p.add_argument("--model", choices=[GNP, GNM], default=GNP)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--ell", type=int, default=1)
    p.add_argument("--grid", help="comma-separated p (or M) values")
    p.add_argument("--coef-grid", dest="coef_grid",
                   help="comma-separated threshold multipliers")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--checks", default=f"{CHECK_BAD_SET},{CHECK_STAR_CERT}",
                   help=f"comma-separated subset of {sorted(ALL_CHECKS)}")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                   help="worker cap; results are identical at any setting")
    common(p)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("bounds", help="closed-form threshold and bound table")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--ell", type=int, default=1)
    p.add_argument("--c1", type=float, default=3.0)
    p.add_argument("--p", type=float)
    p.add_argument("--x", type=float, default=0.0)
    p.add_argument("--format", choices=["text", "csv"], default="text")
    common(p)
    p.set_defaults(func=_cmd_bounds)

    return parser


def _apply_config(argv: list) -> list:
    """Splice `flag = value` lines from --config in ahead of explicit flags,
    so the command line wins on conflicts."""
    if "--config" not in argv:
        return argv
    i = argv.index("--config")
    if i + 1 >= len(argv):
        raise ParameterError("--config requires a path")
    path = argv[i + 1]
    rest = argv[:i] + argv[i + 2:]
    extra = []
    with open(path) as f:
        for lineno, line in enumerate(f, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise FormatError("expected 'flag = value'", line=lineno)
            key, value = (part.strip() for part in line.split("=", 1))
            if not key:
                raise FormatError("empty flag name", line=lineno)
            extra += [f"--{key}", value]
    if not rest:
        raise ParameterError("--config cannot replace the subcommand")
    return rest[:1] + extra + rest[1:]


def main(argv: Optional[list] = None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    try:
        argv = _apply_config(argv)
        parser = _build_parser()
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:
            return EXIT_USAGE if exc.code else EXIT_OK
        return args.func(args)
    except (ParameterError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
