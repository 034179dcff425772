"""Kernel backend selection.

The hot scans (bad-set search, star-certificate verification, common
neighborhood statistics) exist twice: a Cython extension and a pure-Python
fallback over int bit rows. The compiled backend is used when importable;
set ``RAINBOWINDEX_PURE=1`` to force the fallback. Both backends scan
k-sets in the same colex order, so results are identical either way.
"""

import os

import numpy as np

from ..errors import ParameterError
from . import pure as _pure

_compiled = None
if not os.environ.get("RAINBOWINDEX_PURE"):
    try:
        from . import _speedups as _compiled
    except ImportError:
        _compiled = None


def backend_name() -> str:
    return "pure" if _compiled is None else "compiled"


def have_compiled() -> bool:
    return _compiled is not None


def first_bad_set(G, k):
    if _compiled is not None:
        return _compiled.first_bad_set(G.packed(), G.n, k)
    return _pure.first_bad_set(G.rows(), G.n, k)


def star_cert_ok(G, coloring, k, ell) -> bool:
    if coloring.t > 63:
        raise ParameterError("star kernel supports at most 63 colors")
    if _compiled is not None:
        return bool(_compiled.star_cert_ok(G.packed(), coloring.dense(), G.n, k, ell))
    return _pure.star_cert_ok(G.rows(), coloring.dense_lists(), G.n, k, ell)


def common_stats(G, k, sets=None):
    """(min, total, count) of |common neighborhood| over k-sets.

    ``sets=None`` scans every k-set in colex order; otherwise only the given
    index tuples are visited, in order.
    """
    if _compiled is not None:
        if sets is None:
            return _compiled.common_stats_all(G.packed(), G.n, k)
        arr = np.ascontiguousarray(sets, dtype=np.int64)
        return _compiled.common_stats_sets(G.packed(), arr)
    if sets is None:
        return _pure.common_stats_all(G.rows(), G.n, k)
    tuples = [tuple(int(v) for v in s) for s in sets]
    return _pure.common_stats_sets(G.rows(), tuples)
