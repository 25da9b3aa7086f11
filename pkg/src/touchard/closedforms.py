"""Summation formulas and closed forms for walk counts.

The master summation distributes n steps among the constrained
dimensions and the pool of r unrestricted directions:

    count(type, n) = sum over step allocations of
        r^(n - m)
        * prod catalan(i)                 for excursion dims taking 2i steps
        * prod binomial(2i, i)            for bridge dims taking 2i steps
        * prod binomial(j, floor(j/2))    for meander dims taking j steps
        * multinomial(n; all allocations, n - m)

with m the steps consumed by constrained dimensions.  When r = 0 only
allocations with m = n contribute (0^0 = 1 handles that rule below).
"""

from fractions import Fraction

from .exactmath import (
    binomial,
    catalan,
    central_binomial_any,
    central_binomial_even,
    multinomial,
)
from .walks import DimKind, WalkType


def touchard_terms(n: int) -> list:
    """Addends (i, catalan(i) * 2^(n-2i) * binomial(n, 2i)) of Touchard's identity.

    The terms sum to catalan(n + 1); every i in 0..floor(n/2) contributes
    a nonzero addend.
    """
    if n < 0:
        raise ValueError(f"touchard_terms requires n >= 0, got {n}")
    return [
        (i, catalan(i) * 2 ** (n - 2 * i) * binomial(n, 2 * i))
        for i in range(n // 2 + 1)
    ]


def general_count(walk_type: WalkType, n: int) -> int:
    """Evaluate the master summation for any type with up to 4 dimensions."""
    if n < 0:
        raise ValueError(f"general_count requires n >= 0, got {n}")
    kinds = walk_type.constrained_kinds
    r = walk_type.free_direction_count
    total = 0
    parts = []

    def rec(idx: int, used: int, factor: int) -> None:
        nonlocal total
        if idx == len(kinds):
            u = n - used
            weight = factor * r**u  # 0**0 == 1 resolves the r = 0 rule
            if weight:
                total += weight * multinomial(n, parts + [u])
            return
        kind = kinds[idx]
        if kind is DimKind.MEANDER:
            for j in range(n - used + 1):
                parts.append(j)
                rec(idx + 1, used + j, factor * central_binomial_any(j))
                parts.pop()
        else:
            per_pair = catalan if kind is DimKind.EXCURSION else central_binomial_even
            for i in range((n - used) // 2 + 1):
                parts.append(2 * i)
                rec(idx + 1, used + 2 * i, factor * per_pair(i))
                parts.pop()

    rec(0, 0, 1)
    return total


def _require_even(n: int, what: str) -> None:
    if n < 0 or n % 2:
        raise ValueError(f"{what} is defined for even n >= 0, got {n}")


def ab_closed(n: int) -> int:
    """Excursion x bridge count for even n: catalan(n/2) * binomial(n+1, n/2).

    Equals the sum form sum_i catalan(n/2 - i) * binomial(n, 2i) * binomial(2i, i).
    Odd lengths admit no returning walk; callers treat them as 0.
    """
    _require_even(n, "ab_closed")
    return catalan(n // 2) * binomial(n + 1, n // 2)


def aa_closed(n: int) -> int:
    """Excursion x excursion count for even n: catalan(n/2) * catalan(n/2 + 1).

    Equals the sum form sum_i catalan(i) * catalan(n/2 - i) * binomial(n, 2i).
    """
    _require_even(n, "aa_closed")
    return catalan(n // 2) * catalan(n // 2 + 1)


def quadrant_axis_sum(n: int) -> int:
    """sum_i catalan(i) * binomial(n - 2i, floor((n-2i)/2)) * binomial(n, 2i).

    This is the summation attached to the excursion x meander type; the
    oracle confirms it counts those walks exactly.  The published claim
    that it also equals binomial(2n + 1, n) is wrong: that closed form
    counts the meander x free type instead (see halfplane_closed), and
    the two disagree from n = 1 on.  catalog.verify reports the
    discrepancy as a NOTE.
    """
    if n < 0:
        raise ValueError(f"quadrant_axis_sum requires n >= 0, got {n}")
    return sum(
        catalan(i) * central_binomial_any(n - 2 * i) * binomial(n, 2 * i)
        for i in range(n // 2 + 1)
    )


def halfplane_closed(n: int) -> int:
    """binomial(2n + 1, n): count for the meander x free type."""
    if n < 0:
        raise ValueError(f"halfplane_closed requires n >= 0, got {n}")
    return binomial(2 * n + 1, n)


def ace3d_count(n: int) -> int:
    """Double sum for the excursion x meander x free type in three dimensions.

    sum_{i,j} 2^(n-2i-j) * catalan(i) * binomial(j, floor(j/2))
              * multinomial(n; 2i, j, n-2i-j)
    """
    if n < 0:
        raise ValueError(f"ace3d_count requires n >= 0, got {n}")
    total = 0
    for i in range(n // 2 + 1):
        for j in range(n - 2 * i + 1):
            u = n - 2 * i - j
            total += (
                2**u
                * catalan(i)
                * central_binomial_any(j)
                * multinomial(n, [2 * i, j, u])
            )
    return total


def vandermonde_chain(n: int) -> list:
    """Six equivalent rewritings of the excursion x bridge sum, evaluated exactly.

    The chain starts from sum_i catalan(n/2 - i) * binomial(n, 2i) * binomial(2i, i)
    and ends at the closed product catalan(n/2) * binomial(n+1, n/2).  Some
    intermediate addends are not individually integral, so every expression is
    evaluated in exact rational arithmetic and integrality of the total is
    asserted before returning.
    """
    _require_even(n, "vandermonde_chain")
    h = n // 2
    rng = range(h + 1)
    expressions = [
        sum(
            Fraction(binomial(n - 2 * i, h - i) * binomial(n, 2 * i) * binomial(2 * i, i), h - i + 1)
            for i in rng
        ),
        sum(
            Fraction(binomial(n - 2 * i, h - i) * binomial(n, i) * binomial(n - i, i), h - i + 1)
            for i in rng
        ),
        sum(
            Fraction(binomial(n, i) * binomial(n - i, h - i) * binomial(h, i), h - i + 1)
            for i in rng
        ),
        sum(Fraction(binomial(n, h) * binomial(h, i) ** 2, h - i + 1) for i in rng),
        Fraction(binomial(n, h), h + 1)
        * sum(binomial(h, i) * binomial(h + 1, h - i) for i in rng),
        Fraction(binomial(n, h) * binomial(n + 1, h), h + 1),
    ]
    values = []
    for expr in expressions:
        frac = Fraction(expr)
        assert frac.denominator == 1, "each chain expression sums to an integer"
        values.append(int(frac))
    return values
