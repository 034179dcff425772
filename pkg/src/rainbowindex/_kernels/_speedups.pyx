#cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scans over packed adjacency rows.

Row format: C-contiguous uint64 matrix with n rows of ceil(n/64) words; bit
u of row v is set iff uv is an edge. k-sets are enumerated in colex order,
bit for bit the same as the pure fallback. k is capped at 64 and palettes at
63 colors, which covers the intended problem sizes by a wide margin.
"""

from libc.stdint cimport int32_t, int64_t, uint64_t

cdef extern from *:
    """
    #define rxi_popcnt64(x) __builtin_popcountll(x)
    #define rxi_ctz64(x) __builtin_ctzll(x)
    """
    int rxi_popcnt64(unsigned long long x) nogil
    int rxi_ctz64(unsigned long long x) nogil


cdef inline bint _colex_advance(int* idx, int k, int n) nogil:
    cdef int i, j, nxt, lim
    for i in range(k):
        nxt = idx[i] + 1
        lim = idx[i + 1] if i + 1 < k else n
        if nxt < lim:
            idx[i] = nxt
            for j in range(i):
                idx[j] = j
            return True
    return False


def first_bad_set(const uint64_t[:, ::1] adj, int n, int k):
    """First colex k-set that is independent with empty common neighborhood."""
    cdef int W = adj.shape[1]
    cdef int idx[64]
    cdef int i, j, w
    cdef uint64_t x
    cdef bint indep, empty, found = False, more = True
    if k < 1 or k > n or k > 64:
        raise ValueError("k out of kernel range")
    for i in range(k):
        idx[i] = i
    with nogil:
        while more:
            indep = True
            for i in range(1, k):
                for j in range(i):
                    if (adj[idx[i], idx[j] >> 6] >> (idx[j] & 63)) & 1:
                        indep = False
                        break
                if not indep:
                    break
            if indep:
                empty = True
                for w in range(W):
                    x = adj[idx[0], w]
                    for i in range(1, k):
                        x &= adj[idx[i], w]
                    if x != 0:
                        empty = False
                        break
                if empty:
                    found = True
                    break
            more = _colex_advance(idx, k, n)
    if found:
        return tuple(idx[i] for i in range(k))
    return None


def star_cert_ok(const uint64_t[:, ::1] adj, const int32_t[:, ::1] colors,
                 int n, int k, int ell):
    """1 iff every k-set has >= ell common neighbors whose stars are rainbow."""
    cdef int W = adj.shape[1]
    cdef int idx[64]
    cdef int i, w, u, cnt, tz
    cdef uint64_t x, seen, cbit
    cdef bint ok, more = True, passed = True
    if k < 1 or k > n or k > 64:
        raise ValueError("k out of kernel range")
    for i in range(k):
        idx[i] = i
    with nogil:
        while more:
            cnt = 0
            for w in range(W):
                x = adj[idx[0], w]
                for i in range(1, k):
                    x &= adj[idx[i], w]
                while x != 0:
                    tz = rxi_ctz64(x)
                    x &= x - 1
                    u = (w << 6) + tz
                    seen = 0
                    ok = True
                    for i in range(k):
                        cbit = (<uint64_t>1) << colors[u, idx[i]]
                        if seen & cbit:
                            ok = False
                            break
                        seen |= cbit
                    if ok:
                        cnt += 1
                        if cnt >= ell:
                            break
                if cnt >= ell:
                    break
            if cnt < ell:
                passed = False
                break
            more = _colex_advance(idx, k, n)
    return 1 if passed else 0


def common_stats_all(const uint64_t[:, ::1] adj, int n, int k):
    """(min, total, count) of common-neighborhood sizes over all k-sets."""
    cdef int W = adj.shape[1]
    cdef int idx[64]
    cdef int i, w, y
    cdef uint64_t x
    cdef int64_t best = -1, total = 0, count = 0
    cdef bint more = True
    if k < 1 or k > n or k > 64:
        raise ValueError("k out of kernel range")
    for i in range(k):
        idx[i] = i
    with nogil:
        while more:
            y = 0
            for w in range(W):
                x = adj[idx[0], w]
                for i in range(1, k):
                    x &= adj[idx[i], w]
                y += rxi_popcnt64(x)
            total += y
            count += 1
            if best < 0 or y < best:
                best = y
            more = _colex_advance(idx, k, n)
    return (int(best), int(total), int(count))


def common_stats_sets(const uint64_t[:, ::1] adj, const int64_t[:, ::1] sets):
    """(min, total, count) of common-neighborhood sizes over the given k-sets."""
    cdef int W = adj.shape[1]
    cdef Py_ssize_t num = sets.shape[0]
    cdef int k = <int>sets.shape[1]
    cdef Py_ssize_t s
    cdef int i, w, y
    cdef uint64_t x
    cdef int64_t best = -1, total = 0
    with nogil:
        for s in range(num):
            y = 0
            for w in range(W):
                x = adj[sets[s, 0], w]
                for i in range(1, k):
                    x &= adj[sets[s, i], w]
                y += rxi_popcnt64(x)
            total += y
            if best < 0 or y < best:
                best = y
    return (int(best) if num else None, int(total), int(num))
