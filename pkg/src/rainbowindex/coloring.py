"""Edge colorings over a palette 1..t.

Storage is a pair of parallel sequences over the graph's colex edge order,
with lazy lookup structures (dict, dense matrix) so the Python paths and the
compiled kernels each get the access pattern they want.

Coloring file format: first line ``t``, then one line ``u v c`` per edge
(u < v, 1 <= c <= t), LF-terminated, edges in colex order. A coloring file
is only meaningful next to an edge-list file with the same edge set; the
reader validates that pairing.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Optional, Sequence, TextIO

import numpy as np

from . import rng
from .errors import FormatError, ParameterError, UncoloredEdgeError
from .graph import Graph, canonical_edge, common_neighbors, _check_vertex_set


class EdgeColoring:
    """Immutable total map from a fixed edge set to colors 1..t."""

    __slots__ = ("t", "n", "_edges", "_colors", "_map", "_dense", "_dense_lists")

    def __init__(self, n: int, t: int, edges: Sequence[tuple], colors: Sequence[int]):
        if t < 1:
            raise ParameterError("palette size must be at least 1")
        if len(edges) != len(colors):
            raise ParameterError("edges and colors must have equal length")
        edges = tuple(canonical_edge(u, v) for u, v in edges)
        colors = tuple(int(c) for c in colors)
        for (u, v), c in zip(edges, colors):
            if v >= n:
                raise ParameterError(f"edge {u}-{v} out of range for n={n}")
            if not 1 <= c <= t:
                raise ParameterError(f"color {c} outside palette [1, {t}]")
        self.n = n
        self.t = t
        self._edges = edges
        self._colors = colors
        self._map = None
        self._dense = None
        self._dense_lists = None

    @classmethod
    def from_dict(cls, n: int, t: int, mapping: Mapping) -> "EdgeColoring":
        items = sorted(mapping.items(), key=lambda kv: (kv[0][1], kv[0][0]))
        return cls(n, t, [e for e, _ in items], [c for _, c in items])

    def __len__(self) -> int:
        return len(self._edges)

    def edges(self) -> tuple:
        return self._edges

    def items(self) -> Iterator[tuple]:
        return zip(self._edges, self._colors)

    def as_dict(self) -> dict:
        if self._map is None:
            self._map = dict(zip(self._edges, self._colors))
        return self._map

    def color_of(self, u: int, v: int) -> int:
        e = canonical_edge(u, v)
        try:
            return self.as_dict()[e]
        except KeyError:
            raise UncoloredEdgeError(f"edge {e[0]}-{e[1]} has no color") from None

    def covers(self, G: Graph) -> bool:
        """True iff this coloring's edge set is exactly E(G)."""
        return self.n == G.n and self._edges == G.edges()

    def color_array(self, G: Graph) -> tuple:
        """Colors aligned with G.edges(); requires an exact edge-set match."""
        if not self.covers(G):
            raise ParameterError("coloring does not cover this graph's edge set")
        return self._colors

    def dense(self) -> np.ndarray:
        """(n, n) int32 matrix; entry (u, v) is the color of uv, 0 if no edge."""
        if self._dense is None:
            mat = np.zeros((self.n, self.n), dtype=np.int32)
            if self._edges:
                uv = np.array(self._edges, dtype=np.int64)
                cc = np.array(self._colors, dtype=np.int32)
                mat[uv[:, 0], uv[:, 1]] = cc
                mat[uv[:, 1], uv[:, 0]] = cc
            self._dense = mat
        return self._dense

    def dense_lists(self) -> list:
        if self._dense_lists is None:
            self._dense_lists = self.dense().tolist()
        return self._dense_lists

    def permuted(self, perm: Mapping) -> "EdgeColoring":
        """Relabel colors through a palette bijection {1..t} -> {1..t}."""
        return EdgeColoring(self.n, self.t, self._edges,
                            [perm[c] for c in self._colors])

    def __eq__(self, other) -> bool:
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return (self.n, self.t, self._edges, self._colors) == \
               (other.n, other.t, other._edges, other._colors)

    def __hash__(self) -> int:
        return hash((self.n, self.t, self._edges, self._colors))

    def __repr__(self) -> str:
        return f"EdgeColoring(n={self.n}, t={self.t}, m={len(self._edges)})"


def random_coloring(G: Graph, t: int, seed: int, stream: tuple = ()) -> EdgeColoring:
    """Color every edge independently and uniformly from 1..t."""
    if t < 1:
        raise ParameterError("palette size must be at least 1")
    g = rng.generator(seed, *stream)
    colors = g.integers(1, t + 1, size=G.m)
    return EdgeColoring(G.n, t, G.edges(), colors.tolist())


def is_rainbow(edges: Iterable[tuple], c: EdgeColoring) -> bool:
    """True iff the listed edges have pairwise distinct colors."""
    seen = set()
    for u, v in edges:
        col = c.color_of(u, v)
        if col in seen:
            return False
        seen.add(col)
    return True


def rainbow_star_count(G: Graph, c: EdgeColoring, S: Sequence[int]) -> int:
    """Number of common neighbors of S whose star to S is rainbow."""
    s = _check_vertex_set(G, S)
    if len(s) < 3:
        raise ParameterError("terminal set must have at least 3 vertices")
    count = 0
    for u in common_neighbors(G, s):
        seen = set()
        for v in s:
            col = c.color_of(u, v)
            if col in seen:
                break
            seen.add(col)
        else:
            count += 1
    return count


def write_coloring(c: EdgeColoring, out: TextIO) -> None:
    out.write(f"{c.t}\n")
    for (u, v), col in c.items():
        out.write(f"{u} {v} {col}\n")


def coloring_text(c: EdgeColoring) -> str:
    parts = [f"{c.t}\n"]
    parts.extend(f"{u} {v} {col}\n" for (u, v), col in c.items())
    return "".join(parts)


def read_coloring(inp: TextIO, G: Graph) -> EdgeColoring:
    """Parse a coloring file and validate it against G's edge set."""
    from .graph import _parse_int_fields

    lines = inp.read().splitlines()
    if not lines:
        raise FormatError("empty coloring input", line=1)
    (t,) = _parse_int_fields(lines[0], 1, 1)
    if t < 1:
        raise FormatError("palette size must be at least 1", line=1)
    mapping = {}
    for i, line in enumerate(lines[1:], start=2):
        u, v, col = _parse_int_fields(line, i, 3)
        if not (0 <= u < v < G.n):
            raise FormatError(f"edge {u} {v} violates 0 <= u < v < n", line=i)
        if not G.has_edge(u, v):
            raise FormatError(f"edge {u} {v} is not in the graph", line=i)
        if (u, v) in mapping:
            raise FormatError(f"duplicate edge {u} {v}", line=i)
        if not 1 <= col <= t:
            raise FormatError(f"color {col} outside palette [1, {t}]", line=i)
        mapping[(u, v)] = col
    if len(mapping) != G.m:
        raise FormatError(f"coloring has {len(mapping)} edges, graph has {G.m}")
    return EdgeColoring.from_dict(G.n, t, mapping)
