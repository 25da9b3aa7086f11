"""Independent counting oracles: brute-force enumeration and memoized DP.

These are the ground truth the closed forms are checked against, so the
two routes share no counting logic: enumeration filters every candidate
step string, while the DP recurses over (steps remaining, heights of the
constrained dimensions).
"""

import itertools
from dataclasses import dataclass

from .walks import DimKind, Walk, WalkType, step_alphabet


@dataclass(frozen=True)
class ResourceLimits:
    """Guards against accidentally oversized searches."""

    max_brute_candidates: int = 10_000_000
    max_dp_states: int = 100_000_000


DEFAULT_LIMITS = ResourceLimits()


class GuardExceeded(RuntimeError):
    """A requested computation exceeds the configured resource guard."""


def enumerate_walks(walk_type: WalkType, n: int, limits: ResourceLimits | None = None) -> list:
    """All valid walks of the given length, in lexicographic token order.

    Scans every candidate step string, so the candidate count
    len(alphabet) ** n must stay within limits.max_brute_candidates.
    """
    if n < 0:
        raise ValueError(f"walk length must be >= 0, got {n}")
    limits = limits or DEFAULT_LIMITS
    alphabet = sorted(step_alphabet(walk_type))
    candidates = len(alphabet) ** n
    if candidates > limits.max_brute_candidates:
        raise GuardExceeded(
            f"enumerating type {walk_type} at length {n} scans "
            f"{len(alphabet)}^{n} = {candidates} candidate strings, "
            f"over the guard of {limits.max_brute_candidates}"
        )
    kinds = walk_type.dims
    ndims = len(kinds)
    nonneg = tuple(kind.stays_nonnegative for kind in kinds)
    to_zero = tuple(kind.returns_to_zero for kind in kinds)
    directions = [direction for _, direction in alphabet]
    walks = []
    for combo in itertools.product(directions, repeat=n):
        heights = [0] * ndims
        ok = True
        for dim, sign in combo:
            h = heights[dim] + sign
            heights[dim] = h
            if h < 0 and nonneg[dim]:
                ok = False
                break
        if ok:
            for dim in range(ndims):
                if to_zero[dim] and heights[dim]:
                    ok = False
                    break
        if ok:
            walks.append(Walk(combo))
    return walks


def count_dp(walk_type: WalkType, n: int, limits: ResourceLimits | None = None) -> int:
    """Exact count of valid length-n walks via memoized recursion."""
    memo = {}
    return _completions(walk_type, n, memo, limits or DEFAULT_LIMITS)


def sequence_dp(walk_type: WalkType, n_max: int, limits: ResourceLimits | None = None) -> list:
    """Counts for every length 0..n_max, sharing one memo table.

    The memo is keyed on (steps remaining, heights), which is
    independent of the total length, so longer prefixes reuse shorter
    ones' completion counts.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    memo = {}
    limits = limits or DEFAULT_LIMITS
    return [_completions(walk_type, n, memo, limits) for n in range(n_max + 1)]


def _completions(walk_type: WalkType, n: int, memo: dict, limits: ResourceLimits) -> int:
    """Walk completions of length n starting from the origin."""
    if n < 0:
        raise ValueError(f"walk length must be >= 0, got {n}")
    kinds = walk_type.constrained_kinds
    r = walk_type.free_direction_count
    nonneg = tuple(kind.stays_nonnegative for kind in kinds)
    to_zero = tuple(kind.returns_to_zero for kind in kinds)
    span = len(kinds)

    def rec(k: int, heights: tuple) -> int:
        for ci in range(span):
            h = heights[ci]
            # A dimension that must end at 0 is dead once |h| > steps left.
            if to_zero[ci] and (h if h >= 0 else -h) > k:
                return 0
        if k == 0:
            return 1
        key = (k, heights)
        cached = memo.get(key)
        if cached is not None:
            return cached
        total = r * rec(k - 1, heights) if r else 0
        for ci in range(span):
            h = heights[ci]
            total += rec(k - 1, heights[:ci] + (h + 1,) + heights[ci + 1 :])
            if h > 0 or not nonneg[ci]:
                total += rec(k - 1, heights[:ci] + (h - 1,) + heights[ci + 1 :])
        if len(memo) >= limits.max_dp_states:
            raise GuardExceeded(
                f"DP for type {walk_type} needs more than "
                f"{limits.max_dp_states} memo states"
            )
        memo[key] = total
        return total

    return rec(n, (0,) * span)
