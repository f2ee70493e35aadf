"""Exact binomial tail probabilities under a fair-coin null."""

from scipy.stats import binom


def _check_counts(m: int, n: int) -> None:
    if n < 0 or m < 0:
        raise ValueError(f"counts must be non-negative, got m={m}, n={n}")
    if m > n:
        raise ValueError(f"m must not exceed n, got m={m}, n={n}")


def binomial_tail_p(m: int, n: int) -> float:
    """P(X >= m) for X ~ Binomial(n, 1/2).

    Evaluated as the survival function at m - 1, which scipy computes through
    the regularized incomplete beta function. Relative error stays near
    machine precision up to n = 100,000 and beyond, without summing terms.

    Args:
        m: Lower end of the tail, 0 <= m <= n
        n: Number of trials

    Returns:
        Tail probability in [0, 1]; 1.0 for m == 0 (including n == 0)

    Raises:
        ValueError: If m > n or a count is negative
    """
    _check_counts(m, n)
    if m == 0:
        return 1.0
    return min(1.0, float(binom.sf(m - 1, n, 0.5)))


def binomial_two_tailed_p(m: int, n: int) -> float:
    """Two-tailed p-value of observing m successes in n fair trials.

    Sums every outcome no more likely than the observed one, which for the
    symmetric null is twice the tail beyond the majority count, capped at 1.
    """
    _check_counts(m, n)
    return min(1.0, 2.0 * binomial_tail_p(max(m, n - m), n))
