"""Pure-Python kernel fallbacks over int bit rows.

Scan order over k-sets is colexicographic, identical to the compiled
backend, so both return the same witnesses and the same statistics.
"""


def _colex_advance(idx, n):
    k = len(idx)
    for i in range(k):
        nxt = idx[i] + 1
        lim = idx[i + 1] if i + 1 < k else n
        if nxt < lim:
            idx[i] = nxt
            for j in range(i):
                idx[j] = j
            return True
    return False


def first_bad_set(rows, n, k):
    """First colex k-set that is independent with empty common neighborhood."""
    idx = list(range(k))
    while True:
        mask = 0
        indep = True
        for v in idx:
            if rows[v] & mask:
                indep = False
                break
            mask |= 1 << v
        if indep:
            x = rows[idx[0]]
            for v in idx[1:]:
                x &= rows[v]
                if not x:
                    break
            if not x:
                return tuple(idx)
        if not _colex_advance(idx, n):
            return None


def star_cert_ok(rows, colors, n, k, ell):
    """True iff every k-set has >= ell common neighbors with rainbow stars.

    ``colors`` is an n x n nested list; entry [u][v] is the 1-based color of
    edge uv (only consulted where an edge exists).
    """
    idx = list(range(k))
    while True:
        x = rows[idx[0]]
        for v in idx[1:]:
            x &= rows[v]
        cnt = 0
        while x:
            b = x & -x
            u = b.bit_length() - 1
            x ^= b
            seen = 0
            cu = colors[u]
            for v in idx:
                cb = 1 << cu[v]
                if seen & cb:
                    break
                seen |= cb
            else:
                cnt += 1
                if cnt >= ell:
                    break
        if cnt < ell:
            return False
        if not _colex_advance(idx, n):
            return True


def common_stats_all(rows, n, k):
    """(min, total, count) of common-neighborhood sizes over all k-sets."""
    best = None
    total = 0
    count = 0
    idx = list(range(k))
    while True:
        x = rows[idx[0]]
        for v in idx[1:]:
            x &= rows[v]
        y = x.bit_count()
        total += y
        count += 1
        if best is None or y < best:
            best = y
        if not _colex_advance(idx, n):
            return best, total, count


def common_stats_sets(rows, sets):
    """(min, total, count) of common-neighborhood sizes over given k-sets."""
    best = None
    total = 0
    for s in sets:
        x = rows[s[0]]
        for v in s[1:]:
            x &= rows[int(v)]
        y = x.bit_count()
        total += y
        if best is None or y < best:
            best = y
    return best, total, len(sets)
