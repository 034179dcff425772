import io
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import complete, random_graphs, star
from rainbowindex import (EdgeColoring, FormatError, GenSpec, ParameterError,
                          UncoloredEdgeError, coloring_text, gen_gnp,
                          is_rainbow, rainbow_star_count, random_coloring,
                          read_coloring, write_coloring)


def test_single_color_palette():
    G = complete(4)
    c = random_coloring(G, 1, seed=0)
    assert all(col == 1 for _, col in c.items())


def test_empty_graph_coloring():
    G = gen_gnp(GenSpec("gnp", 5, p=0.0, seed=0))
    c = random_coloring(G, 4, seed=0)
    assert len(c) == 0


def test_random_coloring_uniform():
    # 6 edges x 2000 draws per color: 3 sigma on a 1/3 frequency is 0.026.
    G = complete(4)
    trials = 2000
    counts = {e: {1: 0, 2: 0, 3: 0} for e in G.edges()}
    for seed in range(trials):
        c = random_coloring(G, 3, seed=seed)
        for e, col in c.items():
            counts[e][col] += 1
    sigma = math.sqrt((1 / 3) * (2 / 3) / trials)
    for e, dist in counts.items():
        for col, cnt in dist.items():
            assert abs(cnt / trials - 1 / 3) < 3 * sigma, (e, col)


def test_random_coloring_deterministic():
    G = complete(5)
    assert random_coloring(G, 3, 11, stream=(2,)) == random_coloring(G, 3, 11, stream=(2,))
    assert random_coloring(G, 3, 11) != random_coloring(G, 3, 12)


def test_random_coloring_t_zero():
    with pytest.raises(ParameterError):
        random_coloring(complete(3), 0, seed=0)


def test_is_rainbow_trivial():
    G = complete(3)
    c = EdgeColoring(3, 2, G.edges(), [1, 2, 1])
    assert is_rainbow([(0, 1)], c)
    assert is_rainbow([(0, 1), (0, 2)], c)
    assert not is_rainbow([(0, 1), (1, 2)], c)


def test_is_rainbow_uncolored_edge():
    G = complete(3)
    c = EdgeColoring(3, 2, G.edges(), [1, 2, 1])
    with pytest.raises(UncoloredEdgeError):
        is_rainbow([(0, 4)], c)


@settings(max_examples=50, deadline=None)
@given(random_graphs(min_n=4, max_n=9), st.integers(0, 2**32))
def test_is_rainbow_matches_sort_oracle(G, seed):
    import random as pyrandom
    if G.m < 2:
        return
    c = random_coloring(G, 3, seed=seed)
    rnd = pyrandom.Random(seed)
    edges = rnd.sample(list(G.edges()), min(5, G.m))
    colors = sorted(c.color_of(u, v) for u, v in edges)
    expected = all(a != b for a, b in zip(colors, colors[1:]))
    assert is_rainbow(edges, c) == expected


def test_color_lookup_normalizes_order():
    G = complete(3)
    c = EdgeColoring(3, 3, G.edges(), [1, 2, 3])
    assert c.color_of(1, 0) == c.color_of(0, 1)


def test_rainbow_star_count_examples():
    G = complete(4)
    # colex edges: (0,1),(0,2),(1,2),(0,3),(1,3),(2,3)
    c = EdgeColoring(4, 3, G.edges(), [1, 2, 3, 1, 2, 3])
    assert rainbow_star_count(G, c, (0, 1, 2)) == 1
    c2 = EdgeColoring(4, 3, G.edges(), [1, 2, 3, 1, 1, 3])
    assert rainbow_star_count(G, c2, (0, 1, 2)) == 0


def test_rainbow_star_count_bounded_by_common_neighbors():
    from rainbowindex import common_neighbors
    for seed in range(20):
        G = gen_gnp(GenSpec("gnp", 12, p=0.6, seed=seed))
        c = random_coloring(G, 3, seed=seed)
        S = (0, 1, 2)
        assert rainbow_star_count(G, c, S) <= len(common_neighbors(G, S))


def test_rainbow_star_binomial_law():
    # One triple of K6 has exactly 3 common neighbors; the rainbow-star count
    # is then Bin(3, 2/9). Mean and variance checked at 3 sigma over 10^4
    # draws, with the exact fourth central moment for the variance band.
    G = complete(6)
    S = (0, 1, 2)
    q = 2 / 9
    trials = 10 ** 4
    samples = []
    for seed in range(trials):
        c = random_coloring(G, 3, seed=seed)
        samples.append(rainbow_star_count(G, c, S))
    mean = sum(samples) / trials
    var = sum((x - mean) ** 2 for x in samples) / trials
    mu = 3 * q
    sig2 = 3 * q * (1 - q)
    pmf = [math.comb(3, i) * q ** i * (1 - q) ** (3 - i) for i in range(4)]
    mu4 = sum(p * (i - mu) ** 4 for i, p in enumerate(pmf))
    assert abs(mean - mu) < 3 * math.sqrt(sig2 / trials)
    assert abs(var - sig2) < 3 * math.sqrt((mu4 - sig2 ** 2) / trials)


@settings(max_examples=30, deadline=None)
@given(random_graphs(min_n=5, max_n=9), st.integers(0, 2**32), st.data())
def test_palette_permutation_invariance(G, seed, data):
    c = random_coloring(G, 4, seed=seed)
    perm_vals = data.draw(st.permutations([1, 2, 3, 4]))
    perm = dict(zip([1, 2, 3, 4], perm_vals))
    cp = c.permuted(perm)
    S = (0, 1, 2)
    assert rainbow_star_count(G, c, S) == rainbow_star_count(G, cp, S)
    if G.m >= 3:
        edges = list(G.edges())[:3]
        assert is_rainbow(edges, c) == is_rainbow(edges, cp)


def test_coloring_file_round_trip():
    G = gen_gnp(GenSpec("gnp", 12, p=0.5, seed=2))
    c = random_coloring(G, 3, seed=2)
    text = coloring_text(c)
    c2 = read_coloring(io.StringIO(text), G)
    assert c2 == c
    assert coloring_text(c2) == text


def test_coloring_file_validates_pairing():
    G = complete(4)
    H = complete(5)
    c = random_coloring(G, 3, seed=0)
    with pytest.raises(FormatError):
        read_coloring(io.StringIO(coloring_text(c)), H)


@pytest.mark.parametrize("text,line", [
    ("", 1),
    ("0\n", 1),
    ("2\n0 1 3\n0 2 1\n1 2 1\n", 2),
    ("2\n0 1\n", 2),
    ("2\nnope\n", 2),
])
def test_coloring_file_malformed(text, line):
    with pytest.raises(FormatError) as exc:
        read_coloring(io.StringIO(text), complete(3))
    assert exc.value.line == line


def test_palette_range_validation():
    G = complete(3)
    with pytest.raises(ParameterError):
        EdgeColoring(3, 2, G.edges(), [1, 2, 3])
    with pytest.raises(ParameterError):
        EdgeColoring(3, 2, G.edges(), [0, 1, 2])
