"""Small named graphs and shared hypothesis strategies."""

from hypothesis import strategies as st

from rainbowindex import GenSpec, Graph, gen_gnp


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves):
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


@st.composite
def random_graphs(draw, min_n=3, max_n=10):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    p = draw(st.sampled_from([0.15, 0.3, 0.5, 0.7, 0.9]))
    seed = draw(st.integers(min_value=0, max_value=2**32))
    return gen_gnp(GenSpec("gnp", n, p=p, seed=seed))
