"""Permutation patterns, the pigeonhole block lemma, compositions and the
inequality helpers used by the degree-bound calculators.
"""

from __future__ import annotations

from bisect import bisect_left
from fractions import Fraction
from itertools import combinations, permutations
from math import factorial
from typing import Iterator, NamedTuple, Sequence

from .errors import GradedPiError, GroupAxiomError
from .groups import GroupTable

COUNT_CAP = 10


def longest_decreasing_subsequence(perm: Sequence[int]) -> int:
    """Length of the longest strictly decreasing subsequence.

    Patience sorting on the negated sequence: tails[k] is the smallest
    possible final value of a strictly increasing subsequence of length
    k+1 of the negated permutation.  O(n log n).
    """
    tails: list[int] = []
    for value in perm:
        v = -value
        k = bisect_left(tails, v)
        if k == len(tails):
            tails.append(v)
        else:
            tails[k] = v
    return len(tails)


def is_d_good(perm: Sequence[int], d: int) -> bool:
    """No strictly decreasing subsequence of length d; for d > n this is
    every permutation, by convention."""
    if d < 1:
        raise GradedPiError(f"goodness threshold must be >= 1, got {d}")
    return longest_decreasing_subsequence(perm) < d


class GoodCount(NamedTuple):
    count: int
    bound: int


def count_d_good(n: int, d: int, cap: int = COUNT_CAP) -> GoodCount:
    """Exhaustive count of d-good permutations of S_n, with the (d-1)^(2n)
    upper bound attached (and asserted)."""
    if n < 1:
        raise GradedPiError(f"n must be >= 1, got {n}")
    if n > cap:
        raise GradedPiError(f"exhaustive count refused for n = {n} > {cap}")
    count = sum(1 for p in permutations(range(1, n + 1)) if is_d_good(p, d))
    bound = (d - 1) ** (2 * n)
    assert count <= bound, "good-permutation count exceeded its proved bound"
    return GoodCount(count, bound)


def trivial_blocks(group: GroupTable, seq: Sequence[int], d: int) -> list[tuple[int, int]]:
    """Split d consecutive blocks with identity product out of a sequence of
    |H|*d group elements.

    Scanning prefix products left to right, some value must occur d+1 times
    (pigeonhole over |H|*d + 1 prefixes); the d gaps between the first d+1
    occurrences of the first such value are the blocks, reported as 1-based
    inclusive (start, end) index pairs.
    """
    if d < 1:
        raise GradedPiError(f"block count must be >= 1, got {d}")
    if len(seq) != group.order * d:
        raise GradedPiError(
            f"sequence length must be |H|*d = {group.order * d}, got {len(seq)}"
        )
    for a in seq:
        if not 0 <= a < group.order:
            raise GroupAxiomError(f"sequence entry {a} is not a group element index")
    occurrences: dict[int, list[int]] = {group.identity: [0]}
    acc = group.identity
    for i, a in enumerate(seq, start=1):
        acc = group.mul(acc, a)
        hits = occurrences.setdefault(acc, [])
        hits.append(i)
        if len(hits) == d + 1:
            blocks = [(hits[j] + 1, hits[j + 1]) for j in range(d)]
            for start, end in blocks:
                assert group.product(seq[start - 1:end]) == group.identity
            return blocks
    raise AssertionError("pigeonhole failed; the block lemma guarantees a witness")


def compositions_count(n: int) -> int:
    if n < 1:
        raise GradedPiError(f"n must be >= 1, got {n}")
    return 2 ** (n - 1)


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """All ordered compositions of n into positive parts, by part count and
    then lexicographically."""
    if n < 1:
        raise GradedPiError(f"n must be >= 1, got {n}")
    for parts in range(1, n + 1):
        for cuts in combinations(range(1, n), parts - 1):
            bounds = (0,) + cuts + (n,)
            yield tuple(bounds[i + 1] - bounds[i] for i in range(parts))


def multinomial(n: int, qs: Sequence[int]) -> int:
    """Exact multinomial coefficient n! / (q1! ... qu!)."""
    if any(q < 0 for q in qs):
        raise GradedPiError("multinomial parts must be >= 0")
    if sum(qs) != n:
        raise GradedPiError(f"parts {tuple(qs)} do not sum to {n}")
    out = factorial(n)
    for q in qs:
        out //= factorial(q)
    return out


def multinomial_bound_check(n: int, r: int, qs: Sequence[int]) -> bool:
    """Whenever the part count is at most r+1, the multinomial of n-r over
    the parts is bounded by (r+1)^(n-r); vacuously true otherwise."""
    if sum(qs) != n - r:
        raise GradedPiError(f"parts {tuple(qs)} do not sum to n - r = {n - r}")
    if len(qs) > r + 1:
        return True
    return multinomial(n - r, qs) <= (r + 1) ** (n - r)


def e_lower_bound(terms: int) -> Fraction:
    """Partial sum of sum(1/k!), a rational lower bound for e."""
    acc = Fraction(0)
    fact = 1
    for k in range(terms + 1):
        if k:
            fact *= k
        acc += Fraction(1, fact)
    return acc


def e_upper_bound(terms: int) -> Fraction:
    """Lower bound plus the tail estimate 2/(terms+1)!."""
    return e_lower_bound(terms) + Fraction(2, factorial(terms + 1))


def stirling_check(n: int) -> bool:
    """Rigorously verify (n/e)^n < n! with a rational enclosure of e.

    Using any rational e_lo < e, (n/e)^n < (n/e_lo)^n, so it suffices that
    n^n < n! * e_lo^n; the enclosure is refined adaptively although the
    inequality has huge slack (a factor of about sqrt(2 pi n)).
    """
    if n < 1:
        raise GradedPiError(f"n must be >= 1, got {n}")
    terms = 8
    nf = factorial(n)
    for _ in range(12):
        e_lo = e_lower_bound(terms)
        if Fraction(n) ** n < nf * e_lo ** n:
            return True
        terms *= 2
    return False


def y_pattern(word) -> tuple[int, ...]:
    """Relative order of the y-variable indices in a word, as a permutation
    of 1..l (standardization)."""
    indices = [v.index for v in word if v.family == "y"]
    ranks = {idx: r + 1 for r, idx in enumerate(sorted(indices))}
    return tuple(ranks[i] for i in indices)


def d_y_good_monomial(word, d: int) -> bool:
    """A word is d-y-good when the permutation formed by its y-variable
    indices, in order of occurrence, is d-good."""
    return is_d_good(y_pattern(word), d)
