"""Closed-form threshold and tail-bound calculators.

All calculators are pure double-precision functions. Quantities with an
exact rational form (the threshold logarithm base and the rainbow-star
probability) are built from exact integer numerator/denominator first.
Large-exponent powers go through log1p/exp for stability.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import ParameterError

BASE_A = "a"
BASE_LN = "ln"


def _require(cond: bool, what: str) -> None:
    if not cond:
        raise ParameterError(f"precondition violated: {what}")


def threshold_log_base_exact(k: int) -> Fraction:
    """k^k / (k^k - k!) as an exact rational."""
    _require(k >= 3, "k >= 3")
    kk = k ** k
    return Fraction(kk, kk - math.factorial(k))


def threshold_log_base(k: int) -> float:
    """The logarithm base of the threshold formula; strictly between 1 and e."""
    return float(threshold_log_base_exact(k))


def rainbow_star_prob(k: int) -> float:
    """Probability that a uniformly k-colored k-edge star is rainbow: k!/k^k."""
    _require(k >= 3, "k >= 3")
    return float(Fraction(math.factorial(k), k ** k))


def threshold_log(n: float, k: int) -> float:
    """log of n in the threshold base, computed as ln n / ln base."""
    _require(n >= 2, "n >= 2")
    return math.log(n) / math.log(threshold_log_base(k))


def threshold_p(n: int, k: int, base: str = BASE_A) -> float:
    """The edge-probability threshold (log n / n)^(1/k), in the chosen log base.

    The value is returned unclamped; for small n it can exceed 1, and callers
    using it as an edge probability clamp explicitly.
    """
    _require(n >= 2, "n >= 2")
    if base == BASE_A:
        num = threshold_log(n, k)
    elif base == BASE_LN:
        _require(k >= 3, "k >= 3")
        num = math.log(n)
    else:
        raise ParameterError(f"unknown base {base!r}")
    return (num / n) ** (1.0 / k)


def threshold_M(n: int, k: int) -> float:
    """The edge-count threshold (n^(2k-1) log n)^(1/k), log in the threshold base.

    Algebraically equal to n^2 * threshold_p(n, k)."""
    _require(n >= 2, "n >= 2")
    return (n ** (2 * k - 1) * threshold_log(n, k)) ** (1.0 / k)


def p_to_M(n: int, p: float, x: float = 0.0) -> int:
    """Edge count matching probability p at deviation x: floor(pN + x*sqrt(p(1-p)N)),
    clamped into [0, N] with N = n(n-1)/2."""
    _require(0.0 <= p <= 1.0, "0 <= p <= 1")
    _require(n >= 1, "n >= 1")
    npairs = n * (n - 1) // 2
    val = math.floor(p * npairs + x * math.sqrt(p * (1.0 - p) * npairs))
    return min(npairs, max(0, val))


def chernoff_tail_bound(n: int, k: int, c1: float) -> tuple:
    """Chernoff bound on one k-set having fewer than 2k log n common neighbors
    at edge probability c1 * threshold_p(n, k), plus its union over all k-sets.

    Returns (per_set, union). Requires c1^k > 2k and
    n > c1^k * k / (c1^k - 2k), which make the relative deviation positive.
    """
    _require(k >= 3, "k >= 3")
    c1k = c1 ** k
    _require(c1k > 2 * k, f"c1^k > 2k (c1^k={c1k:g}, 2k={2 * k})")
    nmin = c1k * k / (c1k - 2 * k)
    _require(n > nmin, f"n > c1^k*k/(c1^k - 2k) (n={n}, threshold={nmin:g})")
    L = threshold_log(n, k)
    delta = ((c1k - 2 * k) * n - c1k * k) / (c1k * (n - k))
    exponent = (c1k * (n - k) / (2.0 * n)) * L * delta * delta
    per_set = math.exp(-exponent)
    return per_set, math.comb(n, k) * per_set


def star_failure_bound(n: int, k: int, ell: int) -> tuple:
    """Bounds on random k-colorings failing the star condition, given every
    k-set has at least 2k log n common neighbors.

    Returns (per_set, all_sets): (1 + 2k log n)^(ell-1) / n^(2k) for one set
    and the same numerator over n^k for the union across sets. The log is in
    the threshold base; either value may exceed 1 for small n."""
    _require(n >= 2, "n >= 2")
    _require(ell >= 1, "ell >= 1")
    L = threshold_log(n, k)
    numer = (1.0 + 2 * k * L) ** (ell - 1)
    return numer / float(n) ** (2 * k), numer / float(n) ** k


def _int_root_ceiling(n: int, r: int) -> int:
    """Smallest h with h^r >= n, exact in integers."""
    h = max(1, round(n ** (1.0 / r)))
    while h ** r < n:
        h += 1
    while h > 1 and (h - 1) ** r >= n:
        h -= 1
    return h


def bad_set_event_probs(n: int, k: int, p: float) -> tuple:
    """(pr_independent, pr_block_without_outside_common_neighbor) for a fixed
    pilot set of h = ceil(n^(1/(2k+1))) vertices split into floor(h/k) blocks.

    The first is the chance the pilot set is independent; the second the
    chance some block of k pilot vertices has no common neighbor outside the
    pilot set."""
    _require(0.0 <= p <= 1.0, "0 <= p <= 1")
    _require(k >= 3, "k >= 3")
    _require(n >= 1, "n >= 1")
    h = _int_root_ceiling(n, 2 * k + 1)
    _require(h >= k, f"n too small: ceil(n^(1/(2k+1))) = {h} < k = {k}")
    t = h // k
    pairs = h * (h - 1) // 2
    if p == 1.0:
        pr_e1 = 0.0 if pairs else 1.0
    else:
        pr_e1 = math.exp(pairs * math.log1p(-p))
    pk = p ** k
    if pk == 1.0:
        no_common = 0.0 if n - h else 1.0
    else:
        no_common = math.exp((n - h) * math.log1p(-pk))
    pr_e2 = -math.expm1(t * math.log1p(-no_common)) if no_common < 1.0 else 1.0
    return pr_e1, pr_e2
