"""Exact rainbow-index computation and the two polynomial-time certificates.

The exact search iterates the palette size t upward and, per level, runs a
depth-first scan over canonical edge colorings (edge i may use color j only
if colors 1..j-1 already appear on earlier edges, which quotients out
palette relabelings). Every complete coloring is tested against a
precomputed per-level plan: for each k-set, the uncolored candidate trees
and their pairwise conflicts are built once, so the per-coloring check is
pure color lookups. A level where some k-set has too few candidate trees to
ever host ell disjoint ones is skipped outright; no coloring could pass it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from . import _kernels
from .coloring import EdgeColoring, coloring_text, random_coloring
from .errors import ParameterError
from .graph import Graph, common_neighbors, find_bad_set, k_subsets_colex
from .trees import _pick_compatible, minimal_terminal_trees

MODE_STAR = "star"
MODE_FULL = "full"


class CertKind(enum.Enum):
    LOWER = "lower"
    UPPER = "upper"
    EXACT = "exact"


@dataclass(frozen=True)
class Certificate:
    """Machine-checkable evidence about the rainbow index of one graph."""

    kind: CertKind
    k: int
    ell: Optional[int] = None
    witness: Optional[tuple] = None
    coloring: Optional[EdgeColoring] = None
    t: Optional[int] = None


@dataclass
class ExactResult:
    """Outcome of the exact search: the least feasible palette size, or a
    reason why none was produced."""

    t: Optional[int]
    coloring: Optional[EdgeColoring]
    reason: Optional[str] = None

    @property
    def found(self) -> bool:
        return self.t is not None


class _SetPlan:
    __slots__ = ("terminals", "trees", "conflicts", "order", "_family_cache")

    def __init__(self, terminals, trees, conflicts, order):
        self.terminals = terminals
        self.trees = trees          # tuples of edge ranks into G.edges()
        self.conflicts = conflicts  # conflict bitmask per tree
        self.order = order          # candidate order, ascending conflict degree
        self._family_cache = {}

    def uncolored_family_ok(self, ell: int) -> bool:
        """Could any coloring give ell disjoint trees here at all?"""
        if ell == 1:
            return bool(self.trees)
        hit = self._family_cache.get(ell)
        if hit is None:
            allowed = (1 << len(self.trees)) - 1
            hit = _pick_compatible(self.order, self.conflicts, ell, allowed) is not None
            self._family_cache[ell] = hit
        return hit


@lru_cache(maxsize=32)
def _build_plan(G: Graph, k: int, t: int) -> tuple:
    """Per-k-set candidate trees and conflicts for palette size t, colex order."""
    plans = []
    for S in k_subsets_colex(G.n, k):
        raw = minimal_terminal_trees(G, S, t)
        trees = [tuple(G.edge_rank(u, v) for u, v in tr) for tr in raw]
        sset = set(S)
        edge_sets = [frozenset(tr) for tr in trees]
        steiner = []
        for tr in raw:
            verts = set()
            for u, v in tr:
                verts.add(u)
                verts.add(v)
            steiner.append(frozenset(verts - sset))
        conflicts = [0] * len(trees)
        for i in range(len(trees)):
            for j in range(i + 1, len(trees)):
                if edge_sets[i] & edge_sets[j] or steiner[i] & steiner[j]:
                    conflicts[i] |= 1 << j
                    conflicts[j] |= 1 << i
        order = sorted(range(len(trees)), key=lambda i: (conflicts[i].bit_count(), i))
        plans.append(_SetPlan(tuple(S), trees, conflicts, order))
    return tuple(plans)


def _plan_passes(plans: Sequence[_SetPlan], colors: Sequence[int], ell: int) -> bool:
    """Evaluate one complete coloring; k-sets in colex order, first failure wins."""
    if ell == 1:
        for sp in plans:
            for tr in sp.trees:
                seen = 0
                for e in tr:
                    bit = 1 << colors[e]
                    if seen & bit:
                        break
                    seen |= bit
                else:
                    break  # rainbow tree found, next k-set
            else:
                return False
        return True
    for sp in plans:
        rainbow = 0
        nrainbow = 0
        for i, tr in enumerate(sp.trees):
            seen = 0
            for e in tr:
                bit = 1 << colors[e]
                if seen & bit:
                    break
                seen |= bit
            else:
                rainbow |= 1 << i
                nrainbow += 1
        if nrainbow < ell:
            return False
        if _pick_compatible(sp.order, sp.conflicts, ell, rainbow) is None:
            return False
    return True


def check_coloring(G: Graph, c: EdgeColoring, k: int, ell: int) -> bool:
    """True iff every k-set has ell internally disjoint rainbow S-trees."""
    _check_k_ell(G, k, ell)
    if not c.covers(G):
        raise ParameterError("coloring does not cover this graph's edge set")
    if c.t < k - 1:
        return False  # a tree spanning k vertices needs at least k-1 colors
    plans = _build_plan(G, k, c.t)
    return _plan_passes(plans, c.color_array(G), ell)


def _check_k_ell(G: Graph, k: int, ell: int) -> None:
    if k < 3:
        raise ParameterError("k must be at least 3")
    if k > G.n:
        raise ParameterError(f"k={k} exceeds vertex count {G.n}")
    if ell < 1:
        raise ParameterError("ell must be at least 1")


def _is_connected(G: Graph) -> bool:
    if G.n == 0:
        return True
    seen = 1
    frontier = [0]
    while frontier:
        v = frontier.pop()
        x = G.neighbors_bits(v) & ~seen
        while x:
            b = x & -x
            u = b.bit_length() - 1
            seen |= b
            frontier.append(u)
            x ^= b
    return seen == (1 << G.n) - 1


def _infeasibility_reason(G: Graph, k: int, ell: int) -> Optional[str]:
    """Why no palette of any size can work, or None if one could.

    With all edges distinctly colored every tree is rainbow, so feasibility
    is purely structural: each k-set needs ell internally disjoint S-trees
    somewhere in G. For ell=1 that is exactly connectivity; for larger ell,
    a k-set with ell common neighbors is served by stars through distinct
    centers, and only the k-sets failing that shortcut get the exhaustive
    candidate search at the full edge budget.
    """
    if not _is_connected(G):
        return "graph is disconnected, some terminal set has no S-tree"
    if ell == 1:
        return None
    budget = max(G.m, k - 1)
    for S in k_subsets_colex(G.n, k):
        if len(common_neighbors(G, S)) >= ell:
            continue
        raw = minimal_terminal_trees(G, S, budget)
        sset = set(S)
        edge_sets = [frozenset(tr) for tr in raw]
        steiner = [frozenset(v for e in tr for v in e) - sset for tr in raw]
        conflicts = [0] * len(raw)
        for i in range(len(raw)):
            for j in range(i + 1, len(raw)):
                if edge_sets[i] & edge_sets[j] or steiner[i] & steiner[j]:
                    conflicts[i] |= 1 << j
                    conflicts[j] |= 1 << i
        order = sorted(range(len(raw)),
                       key=lambda i: (conflicts[i].bit_count(), i))
        if _pick_compatible(order, conflicts, ell, (1 << len(raw)) - 1) is None:
            s = ",".join(map(str, S))
            return f"no {ell} internally disjoint S-trees exist for S={{{s}}}"
    return None


def exact_rainbow_index(G: Graph, k: int, ell: int, t_max: int) -> ExactResult:
    """Least t <= t_max for which some t-coloring passes check_coloring.

    Intended for small instances; the level-t search space is the set
    partition count of the edge set into at most t blocks. When no level
    succeeds, the reason distinguishes a structurally undefined value from
    a merely exhausted search bound.
    """
    _check_k_ell(G, k, ell)
    if t_max < 1:
        raise ParameterError("t_max must be at least 1")
    t_start = max(1, k - 1)
    m = G.m
    edges = G.edges()
    for t in range(t_start, t_max + 1):
        plans = _build_plan(G, k, t)
        if any(not sp.uncolored_family_ok(ell) for sp in plans):
            continue
        col = [0] * m  # col[e] is the color of the edge with colex rank e

        def dfs(i: int, maxused: int) -> bool:
            if i == m:
                if maxused < t and t != t_start:
                    return False  # already covered at a smaller level
                return _plan_passes(plans, col, ell)
            top = maxused + 1 if maxused < t else t
            for cc in range(1, top + 1):
                col[i] = cc
                if dfs(i + 1, maxused if cc <= maxused else cc):
                    return True
            return False

        if dfs(0, 0):
            witness = EdgeColoring(G.n, t, edges, list(col))
            return ExactResult(t, witness)
    reason = _infeasibility_reason(G, k, ell)
    if reason is not None:
        return ExactResult(None, None, f"undefined: {reason}")
    return ExactResult(None, None, f"exceeded t_max={t_max}")


def lower_certificate(G: Graph, k: int) -> Optional[Certificate]:
    """Independent k-set with empty common neighborhood; forces every S-tree
    past k edges, so no k-coloring can serve it."""
    S = find_bad_set(G, k)
    if S is None:
        return None
    return Certificate(CertKind.LOWER, k=k, witness=S)


def upper_certificate(G: Graph, k: int, ell: int, attempts: int, seed: int,
                      mode: str = MODE_STAR, stream: tuple = ()
                      ) -> Optional[Certificate]:
    """Search random k-colorings for one that serves every k-set.

    Star mode accepts a coloring when every k-set has ell common neighbors
    with rainbow stars (a sufficient condition checkable in polynomial time);
    full mode runs the exact per-set check. Attempt i draws its coloring from
    substream stream+(i,), so runs are reproducible and resumable.
    """
    _check_k_ell(G, k, ell)
    if attempts < 1:
        raise ParameterError("attempts must be at least 1")
    if mode not in (MODE_STAR, MODE_FULL):
        raise ParameterError(f"unknown mode {mode!r}")
    for i in range(attempts):
        c = random_coloring(G, k, seed, stream=(*stream, i))
        if mode == MODE_STAR:
            ok = _kernels.star_cert_ok(G, c, k, ell)
        else:
            ok = check_coloring(G, c, k, ell)
        if ok:
            return Certificate(CertKind.UPPER, k=k, ell=ell, coloring=c, t=k)
    return None


def exact_certificate(G: Graph, k: int, ell: int, t_max: int) -> Optional[Certificate]:
    """Wrap the exact search outcome as a certificate, when it found a value."""
    res = exact_rainbow_index(G, k, ell, t_max)
    if not res.found:
        return None
    return Certificate(CertKind.EXACT, k=k, ell=ell, coloring=res.coloring, t=res.t)


def serialize_certificate(cert: Certificate) -> str:
    """Text form: "LOWER k S=v1,v2,..." or "UPPER k t=<t>" + coloring body."""
    if cert.kind is CertKind.LOWER:
        return f"LOWER {cert.k} S={','.join(map(str, cert.witness))}\n"
    if cert.kind is CertKind.UPPER:
        return f"UPPER {cert.k} t={cert.t}\n" + coloring_text(cert.coloring)
    raise ParameterError("only lower and upper certificates have a text form")
