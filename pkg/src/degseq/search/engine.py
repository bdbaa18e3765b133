"""Maximum graphic difference m(n) and minimal non-graphic witnesses.

m(n) is the largest d such that every even-sum length-n sequence with mean in
[(n-2)/4, (3n-2)/4] and spread <= d is graphic.

Fast mode never enumerates sequences. Any witness pi is majorized by the
majorization-maximal sequence with the same length, sum and value range
[delta(pi), Delta(pi)], and a graphic sequence only majorizes graphic ones.
So a witness with spread <= d exists iff, for some lo and even s in the window,
``maximal_sequence(n, s, lo, lo + d)`` is non-graphic. Existence is monotone in
d, which allows a binary search. Exhaustive mode checks all of this by brute
force for small n.

Witness tie-breaking: spread m+1, then smallest sum, then largest minimum
value, then the majorization-maximal sequence for that (n, s, delta, Delta).
Both modes apply the same rule and therefore return identical rows.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from itertools import groupby
from typing import Any

from degseq.errors import DomainError, SearchRefusedError
from degseq.graphicality import Blocks, erdos_gallai_blocks
from degseq.search.enumeration import iter_bounded_tuples
from degseq.sequence import DegreeSequence, format_sequence, parse_sequence


_log = logging.getLogger("search")

FAST_MAX_N = 1000
EXHAUSTIVE_MAX_N = 14


class SearchMode(Enum):
    FAST = "fast"
    EXHAUSTIVE = "exhaustive"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class SearchRow:
    """One row of the m(n) table: n, m(n) and a minimal non-graphic witness."""

    n: int
    m: int
    witness: DegreeSequence

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {"n": self.n, "m": self.m, "witness": format_sequence(self.witness)}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "SearchRow":
        """Create from dictionary (witness in sequence text syntax)."""
        return cls(n=int(data["n"]), m=int(data["m"]), witness=parse_sequence(data["witness"]))


@dataclass(frozen=True)
class SearchConfig:
    """What to compute and how.

    Attributes:
        mode: fast (majorization reduction) or exhaustive (brute force, n <= 14)
        n_from, n_to: Inclusive range of lengths
        jobs: Worker processes for independent rows (1 = in-process)
        check_monotone: Re-check existence just above the boundary the binary
                        search found and fail loudly if it is not monotone
    """

    mode: SearchMode = SearchMode.FAST
    n_from: int = 4
    n_to: int = 40
    jobs: int = 1
    check_monotone: bool = True

    def __post_init__(self):
        if self.n_from < 4 or self.n_from > self.n_to:
            raise DomainError(f"Invalid range {self.n_from}..{self.n_to} (need 4 <= from <= to)")
        limit = EXHAUSTIVE_MAX_N if self.mode is SearchMode.EXHAUSTIVE else FAST_MAX_N
        if self.n_to > limit:
            raise SearchRefusedError(f"{self.mode} mode is limited to n <= {limit}, got {self.n_to}")
        if self.jobs < 1:
            raise DomainError(f"jobs must be >= 1, got {self.jobs}")


def _maximal_blocks(n: int, s: int, lo: int, hi: int) -> Blocks:
    """Run-length form of (hi^p, r, lo^(n-p-1)) with lo <= r < hi."""
    if lo == hi:
        return ((lo, n),)
    p, extra = divmod(s - n * lo, hi - lo)
    if p == n:
        return ((hi, n),)
    blocks = []
    if p:
        blocks.append((hi, p))
    if extra:
        blocks.append((lo + extra, 1))
        if n - p - 1:
            blocks.append((lo, n - p - 1))
    else:
        blocks.append((lo, n - p))
    return tuple(blocks)


def maximal_sequence(n: int, s: int, lo: int, hi: int) -> DegreeSequence:
    """The sequence of length n, sum s, values in [lo, hi] that majorizes all others.

    Example: maximal_sequence(5, 16, 2, 4) == (4, 4, 4, 2, 2).
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if not 0 <= lo <= hi <= n - 1:
        raise DomainError(f"Need 0 <= lo <= hi <= n-1, got lo={lo}, hi={hi}, n={n}")
    if not n * lo <= s <= n * hi:
        raise DomainError(f"Sum {s} not reachable with {n} values in [{lo}, {hi}]")
    return DegreeSequence.from_blocks(_maximal_blocks(n, s, lo, hi))


def _window_sums(n: int, lo: int, hi: int) -> range:
    """Even sums reachable in [lo, hi] whose mean lies in the closed window."""
    first = max(n * lo, -(-n * (n - 2) // 4))
    last = min(n * hi, n * (3 * n - 2) // 4)
    first += first % 2
    return range(first, last + 1, 2)


def _first_nongraphic_sum(n: int, lo: int, hi: int) -> int | None:
    """Smallest window sum whose maximal sequence on [lo, hi] is non-graphic."""
    for s in _window_sums(n, lo, hi):
        if not erdos_gallai_blocks(_maximal_blocks(n, s, lo, hi)):
            return s
    return None


def exists_nongraphic_with_spread(n: int, d: int) -> DegreeSequence | None:
    """A non-graphic even-sum sequence with mean in the window and spread <= d, or None.

    Scans lo upward and s upward and returns the first hit.
    """
    if n < 2 or d < 0:
        raise DomainError(f"Need n >= 2 and d >= 0, got n={n}, d={d}")
    for lo in range(0, n - d):
        s = _first_nongraphic_sum(n, lo, lo + d)
        if s is not None:
            return maximal_sequence(n, s, lo, lo + d)
    return None


def best_witness(n: int, d: int) -> DegreeSequence | None:
    """Like ``exists_nongraphic_with_spread`` but applies the tie-breaking rule."""
    best: tuple[int, int] | None = None
    for lo in range(0, n - d):
        s = _first_nongraphic_sum(n, lo, lo + d)
        if s is not None and (best is None or (s, -lo) < (best[0], -best[1])):
            best = (s, lo)
    if best is None:
        return None
    s, lo = best
    return maximal_sequence(n, s, lo, lo + d)


def compute_mn_fast(n: int, check_monotone: bool = True) -> SearchRow:
    """m(n) by binary search over d with the majorization reduction."""
    if not 4 <= n <= FAST_MAX_N:
        raise SearchRefusedError(f"Fast mode covers 4 <= n <= {FAST_MAX_N}, got {n}")
    started = time.perf_counter()

    low, high = 0, n - 1
    if exists_nongraphic_with_spread(n, high) is None:
        raise RuntimeError(f"No non-graphic witness for n={n} even at spread {high}")
    tried = []
    while low < high:
        mid = (low + high) // 2
        tried.append(mid)
        if exists_nongraphic_with_spread(n, mid) is not None:
            high = mid
        else:
            low = mid + 1
    d_star = low

    if check_monotone and d_star + 1 <= n - 1:
        if exists_nongraphic_with_spread(n, d_star + 1) is None:
            raise RuntimeError(
                f"Existence not monotone for n={n}: witness at spread {d_star} but none at {d_star + 1}"
            )

    witness = best_witness(n, d_star)
    elapsed = time.perf_counter() - started
    _log.info(f"n={n}: m={d_star - 1} (tried d={tried}) in {elapsed:.2f}s")
    return SearchRow(n=n, m=d_star - 1, witness=witness)


def compute_mn_exhaustive(n: int) -> SearchRow:
    """m(n) by enumerating every non-increasing sequence over [0, n-1]."""
    if not 4 <= n <= EXHAUSTIVE_MAX_N:
        raise SearchRefusedError(f"Exhaustive mode covers 4 <= n <= {EXHAUSTIVE_MAX_N}, got {n}")
    started = time.perf_counter()

    best_key: tuple[int, int, int] | None = None
    best_values: tuple[int, ...] | None = None
    low_sum = n * (n - 2)
    high_sum = n * (3 * n - 2)
    visited = 0
    for values in iter_bounded_tuples(n, 0, n - 1):
        visited += 1
        s = sum(values)
        if s % 2 or not low_sum <= 4 * s <= high_sum:
            continue
        key = (values[0] - values[-1], s, -values[-1])
        # enumeration runs in decreasing lexicographic order, so the first hit
        # for a key is the majorization-maximal one
        if best_key is not None and key >= best_key:
            continue
        blocks = tuple((value, sum(1 for _ in run)) for value, run in groupby(values))
        if not erdos_gallai_blocks(blocks):
            best_key, best_values = key, values

    if best_values is None:
        raise RuntimeError(f"No non-graphic witness for n={n}")
    elapsed = time.perf_counter() - started
    _log.info(f"n={n}: m={best_key[0] - 1} (exhaustive, {visited} sequences) in {elapsed:.2f}s")
    return SearchRow(n=n, m=best_key[0] - 1, witness=DegreeSequence(best_values))


def _compute_row(task: tuple[int, SearchMode, bool]) -> SearchRow:
    """Process-pool entry point; takes one picklable tuple."""
    n, mode, check_monotone = task
    if mode is SearchMode.EXHAUSTIVE:
        return compute_mn_exhaustive(n)
    return compute_mn_fast(n, check_monotone=check_monotone)


def compute_rows(config: SearchConfig) -> list[SearchRow]:
    """Rows for every n in the configured range, ordered by n.

    Rows are independent; with jobs > 1 they run in a process pool and
    ``map`` keeps the output order, so results do not depend on jobs.
    """
    tasks = [(n, config.mode, config.check_monotone) for n in range(config.n_from, config.n_to + 1)]
    _log.info(
        f"Computing m(n) for n={config.n_from}..{config.n_to} "
        f"({config.mode} mode, {config.jobs} job(s))"
    )
    if config.jobs == 1 or len(tasks) == 1:
        return [_compute_row(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=min(config.jobs, len(tasks))) as executor:
        return list(executor.map(_compute_row, tasks))
