"""Simple undirected graphs with bit-row adjacency, plus the two random models.

Vertices are dense 0-based integers. Each adjacency row is a Python int used
as an n-bit set, so neighborhood intersection is a single ``&``; a packed
uint64 matrix view is derived lazily for the compiled kernels.

Edge-list text format: first line ``n m``, then one line ``u v`` per edge with
u < v, ASCII decimal, LF-terminated. Writers emit edges in colex order so that
equal graphs serialize to identical bytes.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, TextIO

import numpy as np

from . import _kernels, rng
from .errors import FormatError, ParameterError

GNP = "gnp"
GNM = "gnm"


def canonical_edge(u: int, v: int) -> tuple[int, int]:
    """Order the endpoints so that u < v."""
    if u == v:
        raise ParameterError(f"self-loop {u}-{v} is not a valid edge")
    return (u, v) if u < v else (v, u)


def edge_index(u: int, v: int) -> int:
    """Colex rank of an edge: (0,1)->0, (0,2)->1, (1,2)->2, (0,3)->3, ..."""
    u, v = canonical_edge(u, v)
    return v * (v - 1) // 2 + u


def edge_from_index(e: int) -> tuple[int, int]:
    """Inverse of :func:`edge_index`."""
    v = (1 + math.isqrt(1 + 8 * e)) // 2
    while v * (v - 1) // 2 > e:
        v -= 1
    while (v + 1) * v // 2 <= e:
        v += 1
    return (e - v * (v - 1) // 2, v)


def k_subsets_colex(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """All k-subsets of {0..n-1} as ascending tuples, in colex order."""
    if k < 0 or k > n:
        return
    if k == 0:
        yield ()
        return
    idx = list(range(k))
    while True:
        yield tuple(idx)
        for i in range(k):
            nxt = idx[i] + 1
            lim = idx[i + 1] if i + 1 < k else n
            if nxt < lim:
                idx[i] = nxt
                for j in range(i):
                    idx[j] = j
                break
        else:
            return


def colex_rank(subset: Sequence[int]) -> int:
    s = sorted(subset)
    return sum(math.comb(v, i + 1) for i, v in enumerate(s))


def colex_unrank(r: int, k: int) -> tuple[int, ...]:
    """The k-subset at colex rank r."""
    out = []
    for j in range(k, 0, -1):
        hi = j
        while math.comb(hi, j) <= r:
            hi *= 2
        lo = j - 1
        while lo + 1 < hi:
            mid = (lo + hi) // 2
            if math.comb(mid, j) <= r:
                lo = mid
            else:
                hi = mid
        out.append(lo)
        r -= math.comb(lo, j)
    return tuple(reversed(out))


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "_rows", "_m", "_packed", "_edges", "_edge_rank", "_hash")

    def __init__(self, n: int, rows: Sequence[int], _packed: Optional[np.ndarray] = None):
        if n < 0:
            raise ParameterError("vertex count must be nonnegative")
        if len(rows) != n:
            raise ParameterError("adjacency must have one row per vertex")
        self.n = n
        self._rows = tuple(rows)
        self._m = sum(r.bit_count() for r in self._rows) // 2
        self._packed = _packed
        self._edges = None
        self._edge_rank = None
        self._hash = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            u, v = canonical_edge(u, v)
            if not (0 <= u and v < n):
                raise ParameterError(f"edge {u}-{v} out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @property
    def m(self) -> int:
        """Number of edges."""
        return self._m

    def rows(self) -> tuple[int, ...]:
        """Adjacency bit rows; bit u of rows()[v] is set iff uv is an edge."""
        return self._rows

    def neighbors_bits(self, v: int) -> int:
        return self._rows[v]

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return False
        return bool(self._rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges (u, v) with u < v, in colex order."""
        if self._edges is None:
            out = []
            for v in range(self.n):
                low = self._rows[v] & ((1 << v) - 1)
                while low:
                    b = low & -low
                    out.append((b.bit_length() - 1, v))
                    low ^= b
            self._edges = tuple(out)
        return self._edges

    def edge_rank(self, u: int, v: int) -> int:
        """Position of edge (u, v) in :meth:`edges`."""
        if self._edge_rank is None:
            self._edge_rank = {e: i for i, e in enumerate(self.edges())}
        return self._edge_rank[canonical_edge(u, v)]

    def words(self) -> int:
        return (self.n + 63) // 64 if self.n else 1

    def packed(self) -> np.ndarray:
        """(n, ceil(n/64)) uint64 matrix of the bit rows, for the kernels."""
        if self._packed is None:
            w = self.words()
            buf = bytearray()
            for r in self._rows:
                buf += r.to_bytes(w * 8, "little")
            mat = np.frombuffer(bytes(buf), dtype="<u8").reshape(self.n, w)
            self._packed = np.ascontiguousarray(mat.astype(np.uint64))
        return self._packed

    def validate(self) -> None:
        """Check the structural invariants (symmetry, no loops, edge count)."""
        total = 0
        for v, row in enumerate(self._rows):
            if row >> v & 1:
                raise AssertionError(f"self-loop at {v}")
            if row >> self.n:
                raise AssertionError(f"row {v} has bits beyond n")
            total += row.bit_count()
        for u, v in self.edges():
            if not (self._rows[v] >> u & 1):
                raise AssertionError(f"asymmetric edge {u}-{v}")
        if total != 2 * self._m:
            raise AssertionError("edge count mismatch")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self._rows))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self._m})"


@dataclass(frozen=True)
class GenSpec:
    """Parameters of one random-graph draw.

    ``stream`` selects a substream of the master seed (see :mod:`.rng`), so
    batch drivers can give every draw its own reproducible stream.
    """

    model: str
    n: int
    p: Optional[float] = None
    M: Optional[int] = None
    seed: int = 0
    stream: tuple = ()

    def __post_init__(self):
        if self.model not in (GNP, GNM):
            raise ParameterError(f"unknown model {self.model!r}")
        if self.n < 1:
            raise ParameterError("n must be at least 1")
        if self.model == GNP:
            if self.p is None or self.M is not None:
                raise ParameterError("gnp spec takes p and not M")
            if not 0.0 <= self.p <= 1.0:
                raise ParameterError(f"p={self.p} outside [0, 1]")
        else:
            if self.M is None or self.p is not None:
                raise ParameterError("gnm spec takes M and not p")
            nmax = self.n * (self.n - 1) // 2
            if not 0 <= self.M <= nmax:
                raise ParameterError(f"M={self.M} outside [0, {nmax}]")


def _graph_from_edge_indices(n: int, idx: np.ndarray) -> Graph:
    """Build a Graph from colex edge indices (vectorized bit packing)."""
    w = (n + 63) // 64 if n else 1
    mat = np.zeros((n, w), dtype=np.uint64)
    if idx.size:
        e = idx.astype(np.int64)
        v = ((1.0 + np.sqrt(8.0 * e + 1.0)) // 2).astype(np.int64)
        v[v * (v - 1) // 2 > e] -= 1
        v[(v + 1) * v // 2 <= e] += 1
        u = e - v * (v - 1) // 2
        ones = np.left_shift(np.uint64(1), (v & 63).astype(np.uint64))
        np.bitwise_or.at(mat, (u, v >> 6), ones)
        ones = np.left_shift(np.uint64(1), (u & 63).astype(np.uint64))
        np.bitwise_or.at(mat, (v, u >> 6), ones)
    if sys.byteorder != "little":
        mat_le = mat.byteswap()
    else:
        mat_le = mat
    buf = mat_le.tobytes()
    stride = w * 8
    rows = [int.from_bytes(buf[i * stride:(i + 1) * stride], "little") for i in range(n)]
    return Graph(n, rows, _packed=mat)


def gen_gnp(spec: GenSpec) -> Graph:
    """Draw a graph with each possible edge present independently with prob p."""
    if spec.model != GNP:
        raise ParameterError("gen_gnp requires a gnp spec")
    n = spec.n
    npairs = n * (n - 1) // 2
    g = rng.generator(spec.seed, *spec.stream)
    mask = g.random(npairs) < spec.p
    return _graph_from_edge_indices(n, np.flatnonzero(mask))


def gen_gnm(spec: GenSpec) -> Graph:
    """Draw a uniformly random graph with exactly M edges.

    Dense draws use a partial Fisher-Yates shuffle over the colex edge
    indices; sparse draws (M <= N/8) use rejection sampling with
    order-preserving de-duplication. Both consume the substream in a fixed
    documented order, so fixtures are stable per seed.
    """
    if spec.model != GNM:
        raise ParameterError("gen_gnm requires a gnm spec")
    n, M = spec.n, spec.M
    npairs = n * (n - 1) // 2
    g = rng.generator(spec.seed, *spec.stream)
    if M == 0:
        chosen = np.empty(0, dtype=np.int64)
    elif 8 * M <= npairs:
        seen = set()
        picks = []
        while len(picks) < M:
            batch = g.integers(0, npairs, size=max(16, 2 * (M - len(picks))))
            for e in batch:
                e = int(e)
                if e not in seen:
                    seen.add(e)
                    picks.append(e)
                    if len(picks) == M:
                        break
        chosen = np.array(picks, dtype=np.int64)
    else:
        arr = np.arange(npairs, dtype=np.int64)
        for i in range(M):
            j = i + int(g.integers(0, npairs - i))
            arr[i], arr[j] = arr[j], arr[i]
        chosen = arr[:M]
    return _graph_from_edge_indices(n, chosen)


def generate(spec: GenSpec) -> Graph:
    """Dispatch on the model field of the spec."""
    return gen_gnp(spec) if spec.model == GNP else gen_gnm(spec)


def _check_vertex_set(G: Graph, S: Sequence[int], nonempty: bool = True) -> tuple[int, ...]:
    s = tuple(sorted(S))
    if nonempty and not s:
        raise ParameterError("vertex set must be nonempty")
    for i, v in enumerate(s):
        if not 0 <= v < G.n:
            raise ParameterError(f"vertex {v} out of range for n={G.n}")
        if i and s[i - 1] == v:
            raise ParameterError(f"duplicate vertex {v}")
    return s


def common_neighbors(G: Graph, S: Sequence[int]) -> tuple[int, ...]:
    """Vertices outside S adjacent to every member of S, ascending."""
    s = _check_vertex_set(G, S)
    x = G.neighbors_bits(s[0])
    for v in s[1:]:
        x &= G.neighbors_bits(v)
    for v in s:
        x &= ~(1 << v)
    out = []
    while x:
        b = x & -x
        out.append(b.bit_length() - 1)
        x ^= b
    return tuple(out)


def is_independent(G: Graph, S: Sequence[int]) -> bool:
    """True iff no edge of G has both endpoints in S."""
    s = _check_vertex_set(G, S, nonempty=False)
    mask = 0
    for v in s:
        if G.neighbors_bits(v) & mask:
            return False
        mask |= 1 << v
    return True


def find_bad_set(G: Graph, k: int) -> Optional[tuple[int, ...]]:
    """First (colex) independent k-set with empty common neighborhood, if any."""
    if k < 3:
        raise ParameterError("k must be at least 3")
    if k > G.n:
        raise ParameterError(f"k={k} exceeds vertex count {G.n}")
    return _kernels.first_bad_set(G, k)


def write_edge_list(G: Graph, out: TextIO) -> None:
    out.write(f"{G.n} {G.m}\n")
    for u, v in G.edges():
        out.write(f"{u} {v}\n")


def edge_list_text(G: Graph) -> str:
    parts = [f"{G.n} {G.m}\n"]
    parts.extend(f"{u} {v}\n" for u, v in G.edges())
    return "".join(parts)


def _parse_int_fields(line: str, lineno: int, count: int) -> list:
    fields = line.split()
    if len(fields) != count:
        raise FormatError(f"expected {count} fields, got {len(fields)}", line=lineno)
    out = []
    for pos, f in enumerate(fields):
        try:
            out.append(int(f))
        except ValueError:
            raise FormatError(f"not an integer: {f!r}", line=lineno, column=pos + 1) from None
    return out


def read_edge_list(inp: TextIO) -> Graph:
    """Parse the edge-list format, with line diagnostics on malformed input."""
    lines = inp.read().splitlines()
    if not lines:
        raise FormatError("empty edge-list input", line=1)
    n, m = _parse_int_fields(lines[0], 1, 2)
    if n < 0 or m < 0:
        raise FormatError("negative header field", line=1)
    if len(lines) - 1 != m:
        raise FormatError(f"header says {m} edges, file has {len(lines) - 1} edge lines", line=1)
    edges = []
    seen = set()
    for i, line in enumerate(lines[1:], start=2):
        u, v = _parse_int_fields(line, i, 2)
        if not (0 <= u < v < n):
            raise FormatError(f"edge {u} {v} violates 0 <= u < v < n", line=i)
        if (u, v) in seen:
            raise FormatError(f"duplicate edge {u} {v}", line=i)
        seen.add((u, v))
        edges.append((u, v))
    return Graph.from_edges(n, edges)
