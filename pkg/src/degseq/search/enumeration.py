"""Enumeration of bounded non-increasing sequences (the brute-force substrate)."""

from collections.abc import Iterator
from itertools import combinations_with_replacement

from degseq.errors import DomainError
from degseq.sequence import DegreeSequence


def iter_bounded_tuples(n: int, lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    """Raw tuples for hot loops; same order and content as ``enumerate_bounded_sequences``.

    Combinations with replacement drawn from a descending value list come out
    non-increasing and in decreasing lexicographic order.
    """
    if lo > hi:
        raise DomainError(f"Empty value range [{lo}, {hi}]")
    if n < 1 or lo < 0:
        raise DomainError(f"Need n >= 1 and lo >= 0, got n={n}, lo={lo}")
    return combinations_with_replacement(range(hi, lo - 1, -1), n)


def enumerate_bounded_sequences(n: int, lo: int, hi: int) -> Iterator[DegreeSequence]:
    """Every non-increasing length-n sequence with values in [lo, hi], once each.

    Count is C(n + hi - lo, n); for n=8 over [0, 7] that is 6435.
    """
    for values in iter_bounded_tuples(n, lo, hi):
        yield DegreeSequence(values)
