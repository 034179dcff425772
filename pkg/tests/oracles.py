"""Independent brute-force oracles.

Everything here recomputes results from first principles with naive loops
and exhaustive enumeration, deliberately sharing no algorithmic machinery
with the library paths it checks.
"""

from itertools import combinations, product


def naive_common_neighbors(G, S):
    out = []
    for u in range(G.n):
        if u in S:
            continue
        if all(G.has_edge(u, v) for v in S):
            out.append(u)
    return tuple(out)


def naive_is_independent(G, S):
    return not any(G.has_edge(u, v) for u, v in combinations(S, 2))


def colex_key(S):
    return tuple(reversed(sorted(S)))


def naive_bad_sets(G, k):
    """All bad k-sets, sorted in colex order."""
    out = [
        S for S in combinations(range(G.n), k)
        if naive_is_independent(G, S) and not naive_common_neighbors(G, S)
    ]
    out.sort(key=colex_key)
    return out


def _edge_subset_is_tree_on(edges, vertices):
    if len(edges) != len(vertices) - 1:
        return False
    adj = {v: [] for v in vertices}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    start = next(iter(vertices))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return seen == set(vertices)


def brute_minimal_s_trees(G, S, max_edges):
    """All minimal S-trees with <= max_edges edges, as sorted edge tuples,
    found by filtering every edge subset of the graph."""
    sset = set(S)
    found = set()
    all_edges = G.edges()
    for size in range(len(S) - 1, max_edges + 1):
        for combo in combinations(all_edges, size):
            verts = set()
            for u, v in combo:
                verts.add(u)
                verts.add(v)
            if not sset <= verts:
                continue
            if not _edge_subset_is_tree_on(combo, verts):
                continue
            deg = dict.fromkeys(verts, 0)
            for u, v in combo:
                deg[u] += 1
                deg[v] += 1
            if any(d == 1 and v not in sset for v, d in deg.items()):
                continue
            found.add(tuple(sorted(combo)))
    return sorted(found)


def brute_rainbow_s_trees(G, c, S, max_edges):
    out = []
    for edges in brute_minimal_s_trees(G, S, max_edges):
        colors = [c.color_of(u, v) for u, v in edges]
        if len(set(colors)) == len(colors):
            out.append(edges)
    return out


def family_is_disjoint(trees, S):
    sset = set(S)
    for a, b in combinations(trees, 2):
        if set(a) & set(b):
            return False
        va = {x for e in a for x in e} - sset
        vb = {x for e in b for x in e} - sset
        if va & vb:
            return False
    return True


def brute_family_exists(trees, S, ell):
    if ell > len(trees):
        return False
    return any(family_is_disjoint(fam, S) for fam in combinations(trees, ell))


def brute_has_disjoint(G, c, S, ell):
    return brute_family_exists(brute_rainbow_s_trees(G, c, S, c.t), S, ell)


def brute_check_coloring(G, c, k, ell):
    return all(
        brute_has_disjoint(G, c, S, ell)
        for S in combinations(range(G.n), k)
    )


def brute_exact_rx(G, k, ell, t_max):
    """Least working palette size by trying every coloring, tiny m only."""
    from rainbowindex import EdgeColoring

    edges = G.edges()
    for t in range(1, t_max + 1):
        for assignment in product(range(1, t + 1), repeat=len(edges)):
            c = EdgeColoring(G.n, t, edges, assignment)
            if brute_check_coloring(G, c, k, ell):
                return t
    return None
