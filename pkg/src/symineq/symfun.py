"""Combinatorial kernels: k-subset enumeration, subset sums/products, and
elementary symmetric polynomials.

Subsets are canonical strictly-increasing index tuples, emitted in
lexicographic order (the deterministic contract every checker and golden
transcript relies on). `elementary_symmetric` is a row dynamic program;
brute-force enumeration through the subset ops stays available as its
independent oracle.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterator

from symineq.exact import PositiveVector

SubsetIndex = tuple[int, ...]


def iterate_k_subsets(n: int, k: int) -> Iterator[SubsetIndex]:
    """Yield all C(n, k) k-subsets of range(n) in lexicographic order."""
    if not 0 < k <= n:
        raise ValueError(f"k must satisfy 0 < k <= n, got k={k} n={n}")
    return iter(combinations(range(n), k))


def _validate_subset(v: PositiveVector, s: SubsetIndex) -> None:
    if not 1 <= len(s) <= len(v):
        raise ValueError(f"subset cardinality must be in 1..{len(v)}, got {len(s)}")
    prev = -1
    for i in s:
        if not prev < i < len(v):
            raise ValueError(f"invalid subset index {i} for n={len(v)}")
        prev = i


def subset_sum(v: PositiveVector, s: SubsetIndex) -> Fraction:
    """Exact sum of the entries of v selected by s."""
    _validate_subset(v, s)
    return sum((v[i] for i in s), Fraction(0))


def subset_product(v: PositiveVector, s: SubsetIndex) -> Fraction:
    """Exact product of the entries of v selected by s."""
    _validate_subset(v, s)
    out = Fraction(1)
    for i in s:
        out *= v[i]
    return out


def elementary_symmetric(v: PositiveVector, k: int) -> Fraction:
    """e_k(v): the sum over all k-subsets of their entry products.

    Computed by the O(n*k) row recurrence
    e_k(a_1..a_m) = e_k(a_1..a_{m-1}) + a_m * e_{k-1}(a_1..a_{m-1}),
    updating in place with j descending so each a_m is used once.
    """
    n = len(v)
    if not 0 < k <= n:
        raise ValueError(f"k must satisfy 0 < k <= n, got k={k} n={n}")
    row = [Fraction(1)] + [Fraction(0)] * k
    for m, a in enumerate(v, start=1):
        for j in range(min(m, k), 0, -1):
            row[j] += a * row[j - 1]
    return row[k]
