"""Seeded random inputs for property tests."""

import random
from fractions import Fraction

from degseq.sequence import DegreeSequence


def random_sequence(rng: random.Random, n: int, lo: int, hi: int) -> DegreeSequence:
    return DegreeSequence(tuple(rng.randint(lo, hi) for _ in range(n)))


def random_banded_sequence(rng: random.Random, max_n: int = 100) -> DegreeSequence:
    """Even-sum sequence concentrated around a random mean.

    Bands are mostly narrow so that a good share of samples is certifiable,
    with some wide ones to exercise the inconclusive side.
    """
    n = rng.randint(2, max_n)
    centre = rng.randint(0, n - 1)
    width = rng.choice([0, 1, 2, max(1, n // 8), max(1, n // 4), max(1, n // 2)])
    lo, hi = max(0, centre - width), min(n - 1, centre + width)
    values = [rng.randint(lo, hi) for _ in range(n)]
    if sum(values) % 2:
        i = rng.randrange(n)
        values[i] += 1 if values[i] < n - 1 else -1
    return DegreeSequence(tuple(values))


def symmetric_d_samples(rng: random.Random, count: int):
    """(n, s, c) with c a positive integer or half-integer and n*(mu-c) < s < n*(mu+c)."""
    for _ in range(count):
        n = rng.randint(3, 40)
        s = rng.randint(0, n * (n - 1))
        c = Fraction(rng.randint(1, 2 * n), 2)
        yield n, s, c


def general_d_samples(rng: random.Random, count: int):
    """(a, b, s, n) integers with n*b < s < n*a, a and b within [0, n-1]."""
    produced = 0
    while produced < count:
        n = rng.randint(3, 40)
        b = rng.randint(0, n - 2)
        a = rng.randint(b + 1, n - 1)
        s = rng.randint(n * b + 1, n * a - 1)
        produced += 1
        yield a, b, s, n
