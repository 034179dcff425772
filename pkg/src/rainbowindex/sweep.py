"""Seeded Monte Carlo sweeps over a p-grid or an M-grid.

Every (grid point, trial) pair owns its own substreams for the graph draw,
the certificate coloring, and the k-set sample, so a sweep is reproducible
bit for bit at any thread count: aggregation only sums per-trial counts.

CSV contract: header
``model,n,k,ell,grid,coef,trials,pr_bad_set,se_bad_set,pr_star_cert,se_star_cert,pr_common_ok,se_common_ok,mean_minY,clamped``
with one row per grid point, floats printed with 6 fractional digits,
unconfigured checks left empty, LF line endings.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence, TextIO

import numpy as np

from . import _kernels, rng
from .bounds import threshold_M, threshold_log, threshold_p
from .errors import ParameterError
from .graph import GNM, GNP, GenSpec, colex_unrank, find_bad_set, generate
from .solver import MODE_STAR, exact_rainbow_index, upper_certificate

CHECK_BAD_SET = "bad_set"
CHECK_STAR_CERT = "star_cert"
CHECK_COMMON_NBRS = "common_nbrs"
CHECK_EXACT = "exact"
ALL_CHECKS = frozenset({CHECK_BAD_SET, CHECK_STAR_CERT, CHECK_COMMON_NBRS, CHECK_EXACT})

FULL_SCAN_MAX_N = 60
SAMPLED_SETS = 10 ** 5
EXACT_MAX_N = 8

CSV_HEADER = ("model,n,k,ell,grid,coef,trials,pr_bad_set,se_bad_set,"
              "pr_star_cert,se_star_cert,pr_common_ok,se_common_ok,"
              "mean_minY,clamped")


@dataclass(frozen=True)
class SweepConfig:
    n: int
    k: int
    ell: int
    mode: str
    grid: tuple
    trials: int
    seed: int
    checks: frozenset
    coefs: Optional[tuple] = None
    clamped: Optional[tuple] = None
    threads: int = 1

    def __post_init__(self):
        if self.mode not in (GNP, GNM):
            raise ParameterError(f"unknown model {self.mode!r}")
        if self.k < 3:
            raise ParameterError("k must be at least 3")
        if self.k > self.n:
            raise ParameterError(f"k={self.k} exceeds n={self.n}")
        if self.ell < 1:
            raise ParameterError("ell must be at least 1")
        if self.trials < 1:
            raise ParameterError("trials must be at least 1")
        if self.threads < 1:
            raise ParameterError("threads must be at least 1")
        if not self.grid:
            raise ParameterError("grid must be nonempty")
        unknown = set(self.checks) - ALL_CHECKS
        if unknown:
            raise ParameterError(f"unknown checks: {sorted(unknown)}")
        if not self.checks:
            raise ParameterError("at least one check required")
        if CHECK_EXACT in self.checks and self.n > EXACT_MAX_N:
            raise ParameterError(f"exact check limited to n <= {EXACT_MAX_N}")
        npairs = self.n * (self.n - 1) // 2
        for gv in self.grid:
            if self.mode == GNP and not 0.0 <= gv <= 1.0:
                raise ParameterError(f"grid value {gv} outside [0, 1]")
            if self.mode == GNM and not 0 <= gv <= npairs:
                raise ParameterError(f"grid value {gv} outside [0, {npairs}]")
        if self.coefs is not None and len(self.coefs) != len(self.grid):
            raise ParameterError("coefs must align with grid")
        if self.clamped is not None and len(self.clamped) != len(self.grid):
            raise ParameterError("clamped flags must align with grid")


def materialize_coef_grid(n: int, k: int, mode: str, coefs: Sequence[float]) -> tuple:
    """Turn threshold multipliers into grid values, clamping into model range.

    gnp: p = min(1, c * threshold_p(n, k)); gnm: M = min(N, floor(c *
    threshold_M(n, k))). Returns (values, clamped_flags)."""
    values = []
    flags = []
    for c in coefs:
        if c < 0:
            raise ParameterError("coefficient must be nonnegative")
        if mode == GNP:
            raw = c * threshold_p(n, k)
            clamped = raw > 1.0
            values.append(1.0 if clamped else raw)
        else:
            npairs = n * (n - 1) // 2
            raw = math.floor(c * threshold_M(n, k))
            clamped = raw > npairs
            values.append(npairs if clamped else int(raw))
        flags.append(clamped)
    return tuple(values), tuple(flags)


def config_from_coefs(n: int, k: int, ell: int, mode: str, coefs: Sequence[float],
                      trials: int, seed: int, checks, threads: int = 1) -> SweepConfig:
    values, flags = materialize_coef_grid(n, k, mode, coefs)
    return SweepConfig(n=n, k=k, ell=ell, mode=mode, grid=values, trials=trials,
                       seed=seed, checks=frozenset(checks), coefs=tuple(coefs),
                       clamped=flags, threads=threads)


@dataclass
class SweepRow:
    model: str
    n: int
    k: int
    ell: int
    grid_value: float
    coef: Optional[float]
    trials: int
    pr_bad_set: Optional[float] = None
    se_bad_set: Optional[float] = None
    pr_star_cert: Optional[float] = None
    se_star_cert: Optional[float] = None
    pr_common_ok: Optional[float] = None
    se_common_ok: Optional[float] = None
    mean_min_y: Optional[float] = None
    pr_exact: Optional[float] = None
    se_exact: Optional[float] = None
    clamped: bool = False


def _stderr(phat: float, trials: int) -> float:
    return math.sqrt(phat * (1.0 - phat) / trials)


def _sample_sets(n: int, k: int, seed: int, point: int, trial: int) -> np.ndarray:
    total = math.comb(n, k)
    if total >= 1 << 63:
        raise ParameterError("k-set space too large to sample")
    g = rng.generator(seed, rng.SET_STREAM, point, trial)
    ranks = g.integers(0, total, size=SAMPLED_SETS)
    return np.array([colex_unrank(int(r), k) for r in ranks], dtype=np.int64)


def _run_trial(cfg: SweepConfig, point: int, gvalue, trial: int, thresh: float) -> dict:
    if cfg.mode == GNP:
        spec = GenSpec(GNP, cfg.n, p=gvalue, seed=cfg.seed,
                       stream=(rng.GRAPH_STREAM, point, trial))
    else:
        spec = GenSpec(GNM, cfg.n, M=int(gvalue), seed=cfg.seed,
                       stream=(rng.GRAPH_STREAM, point, trial))
    G = generate(spec)
    out = {}
    if CHECK_BAD_SET in cfg.checks:
        out["bad_set"] = find_bad_set(G, cfg.k) is not None
    if CHECK_STAR_CERT in cfg.checks:
        cert = upper_certificate(G, cfg.k, cfg.ell, attempts=1, seed=cfg.seed,
                                 mode=MODE_STAR,
                                 stream=(rng.COLOR_STREAM, point, trial))
        out["star_cert"] = cert is not None
    if CHECK_COMMON_NBRS in cfg.checks:
        if cfg.n <= FULL_SCAN_MAX_N:
            miny, _, _ = _kernels.common_stats(G, cfg.k)
        else:
            sets = _sample_sets(cfg.n, cfg.k, cfg.seed, point, trial)
            miny, _, _ = _kernels.common_stats(G, cfg.k, sets=sets)
        out["common_ok"] = miny >= thresh
        out["min_y"] = miny
    if CHECK_EXACT in cfg.checks:
        out["exact"] = exact_rainbow_index(G, cfg.k, cfg.ell, t_max=cfg.k).found
    return out


def run_sweep(cfg: SweepConfig) -> list:
    """One SweepRow per grid point; deterministic in (config, seed) at any
    thread count."""
    thresh = 2 * cfg.k * threshold_log(cfg.n, cfg.k)
    rows = []
    for point, gvalue in enumerate(cfg.grid):
        if cfg.threads > 1:
            with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
                results = list(pool.map(
                    lambda tr: _run_trial(cfg, point, gvalue, tr, thresh),
                    range(cfg.trials)))
        else:
            results = [_run_trial(cfg, point, gvalue, tr, thresh)
                       for tr in range(cfg.trials)]
        row = SweepRow(
            model=cfg.mode, n=cfg.n, k=cfg.k, ell=cfg.ell,
            grid_value=float(gvalue),
            coef=None if cfg.coefs is None else cfg.coefs[point],
            trials=cfg.trials,
            clamped=bool(cfg.clamped[point]) if cfg.clamped else False,
        )
        if CHECK_BAD_SET in cfg.checks:
            phat = sum(r["bad_set"] for r in results) / cfg.trials
            row.pr_bad_set, row.se_bad_set = phat, _stderr(phat, cfg.trials)
        if CHECK_STAR_CERT in cfg.checks:
            phat = sum(r["star_cert"] for r in results) / cfg.trials
            row.pr_star_cert, row.se_star_cert = phat, _stderr(phat, cfg.trials)
        if CHECK_COMMON_NBRS in cfg.checks:
            phat = sum(r["common_ok"] for r in results) / cfg.trials
            row.pr_common_ok, row.se_common_ok = phat, _stderr(phat, cfg.trials)
            row.mean_min_y = sum(r["min_y"] for r in results) / cfg.trials
        if CHECK_EXACT in cfg.checks:
            # carried on the row for library users; the CSV contract has no
            # exact column, so the CLI reports it separately.
            phat = sum(r["exact"] for r in results) / cfg.trials
            row.pr_exact, row.se_exact = phat, _stderr(phat, cfg.trials)
        rows.append(row)
    return rows


def _fmt(value) -> str:
    if value is None:
        return ""
    return f"{float(value):.6f}"


def sweep_csv(rows: Sequence[SweepRow]) -> str:
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(",".join([
            r.model, str(r.n), str(r.k), str(r.ell),
            _fmt(r.grid_value), _fmt(r.coef), str(r.trials),
            _fmt(r.pr_bad_set), _fmt(r.se_bad_set),
            _fmt(r.pr_star_cert), _fmt(r.se_star_cert),
            _fmt(r.pr_common_ok), _fmt(r.se_common_ok),
            _fmt(r.mean_min_y), "1" if r.clamped else "0",
        ]))
    return "\n".join(lines) + "\n"


def write_sweep_csv(rows: Sequence[SweepRow], out: TextIO) -> None:
    out.write(sweep_csv(rows))
