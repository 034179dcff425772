"""Minimal terminal-spanning trees and internally disjoint families.

A minimal terminal tree for a set S is a tree whose vertex set contains S
and whose every leaf lies in S; a non-terminal leaf could be pruned, so
restricting enumeration to minimal trees loses nothing for existence
questions while cutting the candidate lists sharply.

Enumeration picks the set W of non-terminal (Steiner) vertices first, then
the spanning trees of the induced subgraph on S + W in which every W-vertex
is internal. Under a palette of t colors a rainbow tree has at most t edges,
hence at most t+1-|S| Steiner vertices, so callers pass max_edges = t.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .coloring import EdgeColoring
from .errors import ParameterError
from .graph import Graph, canonical_edge, _check_vertex_set


@dataclass(frozen=True)
class SteinerTree:
    """A tree connecting a terminal set; every leaf is a terminal."""

    edges: tuple
    terminals: tuple

    def __post_init__(self):
        edges = tuple(sorted(canonical_edge(u, v) for u, v in self.edges))
        terminals = tuple(sorted(self.terminals))
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "terminals", terminals)
        verts = self.vertices()
        if len(edges) != len(verts) - 1 or not _connected(verts, edges):
            raise ParameterError("edge set does not form a tree")
        if not set(terminals) <= verts:
            raise ParameterError("terminals not all covered by the tree")
        deg = {}
        for u, v in edges:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        tset = set(terminals)
        for v, d in deg.items():
            if d == 1 and v not in tset:
                raise ParameterError(f"non-terminal leaf {v}")

    def vertices(self) -> set:
        out = set()
        for u, v in self.edges:
            out.add(u)
            out.add(v)
        return out

    def steiner_vertices(self) -> set:
        return self.vertices() - set(self.terminals)


@dataclass(frozen=True)
class DisjointTreeFamily:
    """Trees over one terminal set, pairwise sharing no edge and no
    vertex outside the terminals."""

    trees: tuple

    def __post_init__(self):
        trees = tuple(self.trees)
        object.__setattr__(self, "trees", trees)
        if not trees:
            raise ParameterError("family must contain at least one tree")
        terminals = trees[0].terminals
        for t in trees[1:]:
            if t.terminals != terminals:
                raise ParameterError("family trees must share the terminal set")
        for a, b in combinations(trees, 2):
            if set(a.edges) & set(b.edges):
                raise ParameterError("family trees share an edge")
            if a.steiner_vertices() & b.steiner_vertices():
                raise ParameterError("family trees share a non-terminal vertex")


def _connected(verts: set, edges: Sequence[tuple]) -> bool:
    if not verts:
        return True
    parent = {v: v for v in verts}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = len(verts)
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            comps -= 1
    return comps == 1


def minimal_terminal_trees(G: Graph, S: Sequence[int], max_edges: int) -> list:
    """All minimal S-trees with at most max_edges edges, as sorted edge tuples.

    Output order is deterministic: Steiner sets ascending by size then
    lexicographically, spanning trees in combination order, with the final
    list sorted by edge tuple.
    """
    s = _check_vertex_set(G, S)
    k = len(s)
    if max_edges < k - 1:
        raise ParameterError(f"max_edges={max_edges} below k-1={k - 1}")
    budget = min(max_edges + 1 - k, G.n - k)
    others = [v for v in range(G.n) if v not in set(s)]
    rows = G.rows()
    seen = set()
    out = []
    for w_size in range(budget + 1):
        for W in combinations(others, w_size):
            U = sorted(s + W)
            wset = set(W)
            induced = []
            for i, v in enumerate(U):
                row = rows[v]
                for u in U[:i]:
                    if row >> u & 1:
                        induced.append((u, v))
            need = len(U) - 1
            if len(induced) < need:
                continue
            uset = set(U)
            for combo in combinations(induced, need):
                deg = dict.fromkeys(U, 0)
                for u, v in combo:
                    deg[u] += 1
                    deg[v] += 1
                if any(deg[w] < 2 for w in wset):
                    continue
                if any(d == 0 for d in deg.values()):
                    continue
                if not _connected(uset, combo):
                    continue
                key = tuple(sorted(combo))
                if key not in seen:
                    seen.add(key)
                    out.append(key)
    out.sort()
    return out


def enumerate_rainbow_s_trees(G: Graph, c: EdgeColoring, S: Sequence[int],
                              max_edges: int) -> list:
    """All minimal S-trees with <= max_edges edges that are rainbow under c."""
    s = _check_vertex_set(G, S)
    if len(s) < 3:
        raise ParameterError("terminal set must have at least 3 vertices")
    if not c.covers(G):
        raise ParameterError("coloring does not cover this graph's edge set")
    out = []
    for edges in minimal_terminal_trees(G, s, max_edges):
        cols = set()
        ok = True
        for u, v in edges:
            col = c.color_of(u, v)
            if col in cols:
                ok = False
                break
            cols.add(col)
        if ok:
            out.append(SteinerTree(edges, s))
    return out


def _conflict_masks(trees: Sequence[SteinerTree]) -> list:
    """Bitmask per tree of the trees it conflicts with (shared edge or
    shared non-terminal vertex)."""
    edge_sets = [set(t.edges) for t in trees]
    steiner = [t.steiner_vertices() for t in trees]
    masks = [0] * len(trees)
    for i in range(len(trees)):
        for j in range(i + 1, len(trees)):
            if edge_sets[i] & edge_sets[j] or steiner[i] & steiner[j]:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    return masks


def _pick_compatible(order: Sequence[int], masks: Sequence[int], ell: int,
                     allowed: int) -> Optional[list]:
    """Backtracking search for ell pairwise non-conflicting candidates drawn
    from the `allowed` bitmask, trying candidates in `order`."""

    chosen: list = []

    def rec(pos: int, avail: int) -> bool:
        if len(chosen) == ell:
            return True
        for t in range(pos, len(order)):
            if len(order) - t < ell - len(chosen):
                return False
            i = order[t]
            if not (avail >> i) & 1:
                continue
            chosen.append(i)
            if rec(t + 1, avail & ~masks[i]):
                return True
            chosen.pop()
        return False

    return chosen if rec(0, allowed) else None


def find_disjoint_family(candidates: Sequence[SteinerTree], ell: int
                         ) -> Optional[DisjointTreeFamily]:
    """Some ell pairwise internally disjoint candidates, or None.

    Candidates are tried in ascending conflict degree so dead ends surface
    early; for ell=1 the first candidate is returned unchanged.
    """
    if ell < 1:
        raise ParameterError("family size must be at least 1")
    if not candidates:
        return None
    terminals = candidates[0].terminals
    if any(t.terminals != terminals for t in candidates):
        raise ParameterError("candidates must share one terminal set")
    if ell == 1:
        return DisjointTreeFamily((candidates[0],))
    if len(candidates) < ell:
        return None
    masks = _conflict_masks(candidates)
    order = sorted(range(len(candidates)), key=lambda i: (masks[i].bit_count(), i))
    picked = _pick_compatible(order, masks, ell, (1 << len(candidates)) - 1)
    if picked is None:
        return None
    return DisjointTreeFamily(tuple(candidates[i] for i in picked))


def has_disjoint_rainbow_trees(G: Graph, c: EdgeColoring, S: Sequence[int],
                               ell: int) -> bool:
    """True iff S has ell internally disjoint rainbow S-trees under c."""
    if ell < 1:
        raise ParameterError("family size must be at least 1")
    if c.t < len(set(S)) - 1:
        return False  # a rainbow tree under t colors has at most t edges
    trees = enumerate_rainbow_s_trees(G, c, S, c.t)
    return find_disjoint_family(trees, ell) is not None
