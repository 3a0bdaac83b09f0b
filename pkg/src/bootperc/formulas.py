"""Closed-form minimum seed sizes, sandwich bounds and lattice counts.

Bounds are returned as exact rationals; callers format decimals.
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil, comb, factorial
from typing import Sequence

from bootperc.errors import PreconditionError, ResourceLimitError

RationalLike = int | Fraction


def min_seed_complete(n: int, r: int) -> int:
    """Minimum percolating vertex seed size on the complete graph: min(n, r)."""
    if n < 1 or r < 0:
        raise PreconditionError("need n >= 1 and r >= 0")
    return min(n, r)


def min_seed_hamming_dim2(n: int, r: int) -> int:
    """Minimum percolating vertex seed size on the 2-dimensional Hamming graph.

    n^2 when n <= ceil(r/2) (every degree is below r, nothing ever
    activates), floor((r+1)^2/4) otherwise.
    """
    if n < 1 or r < 0:
        raise PreconditionError("need n >= 1 and r >= 0")
    if n <= ceil(r / 2):
        return n * n
    return (r + 1) ** 2 // 4


def weak_saturation_hamming(n: int, r: int, d: int) -> int:
    """Minimum star-process seed size on the Hamming graph: C(d+r, d+1).

    Proven only for n >= r+1; smaller n is rejected rather than
    extrapolated.
    """
    if d < 1 or r < 1:
        raise PreconditionError("need d >= 1 and r >= 1")
    if n <= r:
        raise PreconditionError(f"formula requires n >= r+1, got n={n}, r={r}")
    return comb(d + r, d + 1)


def min_seed_line_complete(n: int, r: int) -> int:
    """Minimum line-process seed size on the complete graph.

    floor((r+2)^2/8) when n >= ceil(r/2)+2; otherwise the line graph is
    too sparse to percolate at all and the answer is C(n, 2).
    """
    if n < 2 or r < 0:
        raise PreconditionError("need n >= 2 and r >= 0")
    if n >= ceil(r / 2) + 2:
        return (r + 2) ** 2 // 8
    return comb(n, 2)


def min_seed_hamming_bounds(n: int, r: int, d: int) -> tuple[Fraction, Fraction]:
    """Exact sandwich bounds for the minimum vertex seed on the Hamming graph.

    lower = C(d+r, d+1)/r, upper = ((r+2d-1)^d - delta^2 (r-2)^d)/(2 d!)
    with delta = (d-2)/(d-1).  Valid for n >= r+1, d >= 2, r >= 1.
    """
    if d < 2 or r < 1:
        raise PreconditionError("need d >= 2 and r >= 1")
    if n <= r:
        raise PreconditionError(f"bounds require n >= r+1, got n={n}, r={r}")
    delta = Fraction(d - 2, d - 1)
    lower = Fraction(comb(d + r, d + 1), r)
    upper = Fraction((r + 2 * d - 1) ** d - delta**2 * (r - 2) ** d, 2 * factorial(d))
    assert lower <= upper
    return lower, upper


def count_weighted_simplex(
    a: Sequence[RationalLike], b: RationalLike, max_count: int = 10_000_000
) -> int:
    """Exact number of nonnegative integer solutions of a_1 x_1 + ... + a_k x_k <= b.

    Bounded enumeration over exact rationals; raises when the count
    would exceed ``max_count``.
    """
    weights = [Fraction(x) for x in a]
    if not weights or any(w <= 0 for w in weights):
        raise PreconditionError("all weights must be positive")
    budget = Fraction(b)
    count = 0

    def walk(i: int, remaining: Fraction) -> None:
        nonlocal count
        if i == len(weights):
            count += 1
            if count > max_count:
                raise ResourceLimitError(f"solution count exceeds {max_count}")
            return
        w = weights[i]
        x = 0
        while w * x <= remaining:
            walk(i + 1, remaining - w * x)
            x += 1

    if budget >= 0:
        walk(0, budget)
    return count


def weighted_simplex_bounds(
    a: Sequence[RationalLike], b: RationalLike
) -> tuple[Fraction, Fraction]:
    """Two-sided closed-form estimate for :func:`count_weighted_simplex`.

    (b^k, (a_1+...+a_k+b)^k) / (k! a_1...a_k); the lower side requires
    b >= min(a).
    """
    weights = [Fraction(x) for x in a]
    if not weights or any(w <= 0 for w in weights):
        raise PreconditionError("all weights must be positive")
    budget = Fraction(b)
    if budget < min(weights):
        raise PreconditionError("bounds require b >= min(a)")
    k = len(weights)
    denom = factorial(k)
    for w in weights:
        denom *= w
    return budget**k / denom, (sum(weights) + budget) ** k / denom
