"""Exact graphicality decisions with certificates.

The Erdős–Gallai test is the single source of truth (``is_graphic``). Havel–Hakimi
builds an explicit realization and serves as an independent oracle in tests.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import accumulate
from typing import Any

from degseq.sequence import DegreeSequence


_log = logging.getLogger("graph")

Blocks = tuple[tuple[int, int], ...]


class VerdictReason(Enum):
    """Why a sequence is (or is not) graphic."""

    ERDOS_GALLAI_PASS = "erdos_gallai_pass"
    ERDOS_GALLAI_FAIL = "erdos_gallai_fail"
    ODD_SUM = "odd_sum"
    VALUE_OUT_OF_RANGE = "value_out_of_range"
    HAVEL_HAKIMI_STUCK = "havel_hakimi_stuck"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Verdict:
    """Graphicality verdict with a checkable certificate.

    Attributes:
        graphic: Decision
        reason: Which rule decided
        k, lhs, rhs: First failing Erdős–Gallai index with both sides (ERDOS_GALLAI_FAIL)
        max_value: Offending value (VALUE_OUT_OF_RANGE) or the degree Havel–Hakimi
                   could not place (HAVEL_HAKIMI_STUCK)
        n: Sequence length
    """

    graphic: bool
    reason: VerdictReason
    n: int
    k: int | None = None
    lhs: int | None = None
    rhs: int | None = None
    max_value: int | None = None

    def describe(self) -> str:
        """One-line human description."""
        if self.reason is VerdictReason.ERDOS_GALLAI_PASS:
            return "graphic (Erdős–Gallai holds for every k)"
        if self.reason is VerdictReason.ERDOS_GALLAI_FAIL:
            return f"non-graphic: Erdős–Gallai fails at k={self.k} ({self.lhs} > {self.rhs})"
        if self.reason is VerdictReason.ODD_SUM:
            return "non-graphic: odd sum"
        if self.reason is VerdictReason.VALUE_OUT_OF_RANGE:
            return f"non-graphic: value {self.max_value} exceeds n-1 = {self.n - 1}"
        return f"non-graphic: Havel–Hakimi cannot place degree {self.max_value}"

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for serialization."""
        result: dict[str, Any] = {"graphic": self.graphic, "reason": self.reason.value}
        if self.reason is VerdictReason.ERDOS_GALLAI_FAIL:
            result.update(k=self.k, lhs=self.lhs, rhs=self.rhs)
        elif self.reason in (VerdictReason.VALUE_OUT_OF_RANGE, VerdictReason.HAVEL_HAKIMI_STUCK):
            result.update(max_value=self.max_value, n=self.n)
        return result


@dataclass(frozen=True)
class Realization:
    """Simple graph on vertices 0..n-1; vertex i carries the i-th canonical degree."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def degrees(self) -> list[int]:
        """Degree of every vertex, recounted from the edge list."""
        result = [0] * self.n
        for u, v in self.edges:
            result[u] += 1
            result[v] += 1
        return result

    def to_lines(self) -> list[str]:
        """``u v`` per edge, u < v, sorted lexicographically."""
        return [f"{u} {v}" for u, v in self.edges]


def _precheck(seq: DegreeSequence) -> Verdict | None:
    """Odd-sum and value-range verdicts shared by both algorithms; None when both pass."""
    if seq.s % 2:
        return Verdict(False, VerdictReason.ODD_SUM, n=seq.n)
    if seq.max_deg > seq.n - 1:
        return Verdict(False, VerdictReason.VALUE_OUT_OF_RANGE, n=seq.n, max_value=seq.max_deg)
    return None


def erdos_gallai_check(seq: DegreeSequence, cutoff: bool = True) -> Verdict:
    """Decide graphicality, reporting the smallest failing k on rejection.

    For every k: sum(d_1..d_k) <= k(k-1) + sum_{i>k} min(d_i, k).

    Args:
        seq: Sequence to test
        cutoff: Stop at the first k with d_k < k-1. Beyond that point the
                inequality cannot start failing, so the verdict and the
                reported k are the same as with ``cutoff=False``.
    """
    early = _precheck(seq)
    if early is not None:
        return early

    d = seq.values
    n, s = seq.n, seq.s
    prefix = [0, *accumulate(d)]
    # w: how many values are >= k; shrinks as k grows
    w = n
    for k in range(1, n + 1):
        if cutoff and d[k - 1] < k - 1:
            break
        while w > 0 and d[w - 1] < k:
            w -= 1
        t = max(k, w)
        lhs = prefix[k]
        rhs = k * (k - 1) + k * (t - k) + (s - prefix[t])
        if lhs > rhs:
            return Verdict(False, VerdictReason.ERDOS_GALLAI_FAIL, n=n, k=k, lhs=lhs, rhs=rhs)

    return Verdict(True, VerdictReason.ERDOS_GALLAI_PASS, n=n)


def erdos_gallai_blocks(blocks: Blocks) -> bool:
    """Erdős–Gallai on a run-length encoded sequence ((value, count), ... decreasing).

    Checks only the ends of runs (and k = n), which is enough for a
    non-increasing sequence. Cost grows with the number of runs, not with n.
    """
    n = sum(count for _, count in blocks)
    s = sum(value * count for value, count in blocks)
    if s % 2 or blocks[0][0] > n - 1:
        return False

    k = 0
    lhs = 0
    for index, (value, count) in enumerate(blocks):
        k += count
        lhs += value * count
        rhs = k * (k - 1)
        for later_value, later_count in blocks[index + 1 :]:
            rhs += later_count * min(later_value, k)
        if lhs > rhs:
            return False
    return True


def havel_hakimi_realize(seq: DegreeSequence) -> Realization | Verdict:
    """Build a realization greedily, or return a non-graphic verdict.

    The vertex with the largest remaining degree is joined to the next-largest
    ones and then retired, so no loop or repeated edge can appear.
    """
    early = _precheck(seq)
    if early is not None:
        return early

    remaining = [(d, v) for v, d in enumerate(seq.values)]
    edges: list[tuple[int, int]] = []
    while remaining:
        remaining.sort(key=lambda item: (-item[0], item[1]))
        degree, vertex = remaining[0]
        if degree == 0:
            break
        rest = remaining[1:]
        if degree > len(rest) or rest[degree - 1][0] == 0:
            _log.debug(f"Havel–Hakimi stuck on vertex {vertex} needing {degree}")
            return Verdict(
                False, VerdictReason.HAVEL_HAKIMI_STUCK, n=seq.n, max_value=degree
            )
        for index in range(degree):
            other_degree, other = rest[index]
            edges.append((min(vertex, other), max(vertex, other)))
            rest[index] = (other_degree - 1, other)
        remaining = rest

    return Realization(n=seq.n, edges=tuple(sorted(edges)))


def is_graphic(seq: DegreeSequence) -> bool:
    """Erdős–Gallai decision; every other module defers to this."""
    return erdos_gallai_check(seq).graphic
