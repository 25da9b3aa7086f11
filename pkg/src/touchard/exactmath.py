"""Exact integer combinatorics shared by every counting routine.

All results are plain Python ints, so they are unbounded and every
computation is exact; nothing in this package ever touches floating
point or fixed-width arithmetic when producing a count.
"""

import math
from typing import Sequence


def binomial(n: int, k: int) -> int:
    """n choose k, defined as 0 whenever k lies outside [0, n]."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(n: int, parts: Sequence[int]) -> int:
    """Number of ways to split n labelled slots into groups of the given sizes.

    ``parts`` must be non-negative and sum to n.  Computed as a product of
    binomials so the intermediate values stay integral.
    """
    if n < 0:
        raise ValueError(f"multinomial requires n >= 0, got n={n}")
    total = 0
    for p in parts:
        if p < 0:
            raise ValueError(f"multinomial parts must be >= 0, got {p}")
        total += p
    if total != n:
        raise ValueError(f"multinomial parts sum to {total}, expected n={n}")
    out = 1
    rest = n
    for p in parts:
        out *= math.comb(rest, p)
        rest -= p
    return out


def catalan(i: int) -> int:
    """The i-th Catalan number, binomial(2i, i) / (i + 1)."""
    if i < 0:
        raise ValueError(f"catalan requires i >= 0, got i={i}")
    q, r = divmod(math.comb(2 * i, i), i + 1)
    assert r == 0, "binomial(2i, i) is always divisible by i + 1"
    return q


def central_binomial_even(i: int) -> int:
    """binomial(2i, i): balanced sign choices among 2i steps."""
    if i < 0:
        raise ValueError(f"central_binomial_even requires i >= 0, got i={i}")
    return math.comb(2 * i, i)


def central_binomial_any(j: int) -> int:
    """binomial(j, floor(j/2)): as-balanced-as-possible choices among j steps."""
    if j < 0:
        raise ValueError(f"central_binomial_any requires j >= 0, got j={j}")
    return math.comb(j, j // 2)


def motzkin(n: int) -> int:
    """The n-th Motzkin number, sum_i catalan(i) * binomial(n, 2i)."""
    if n < 0:
        raise ValueError(f"motzkin requires n >= 0, got n={n}")
    return sum(catalan(i) * binomial(n, 2 * i) for i in range(n // 2 + 1))
