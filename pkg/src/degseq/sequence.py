"""Canonical degree sequences, shorthand text syntax, statistics and majorization.

A degree sequence is stored non-increasing. The shorthand ``v^k`` repeats ``v``
``k`` times, so ``3^2`` is ``(3, 3)`` and ``1^6,5^2`` is ``(5, 5, 1, 1, 1, 1, 1, 1)``.

Examples:
    >>> seq = parse_sequence("1^6,5^2")
    >>> seq.values
    (5, 5, 1, 1, 1, 1, 1, 1)
    >>> format_sequence(seq)
    '5^2,1^6'
    >>> stats(parse_sequence("3,3,1,1")).rg
    Fraction(1, 1)
"""

import logging
import re
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import accumulate, groupby
from typing import Any

from degseq.errors import DomainError, InvalidTransferError, SequenceParseError
from degseq.rational import format_fraction


MAX_LENGTH = 10_000
# below the interpreter's int() string conversion limit
MAX_DIGITS = 4000

_TERM = re.compile(r"([0-9]+)(?:\^([0-9]+))?")
_log = logging.getLogger("seq")


@dataclass(frozen=True)
class DegreeSequence:
    """Non-increasing vector of non-negative integers.

    Any iterable of values is accepted; the stored form is sorted non-increasing,
    so every permutation of the same values yields an equal object. Values are
    not capped at n-1 here; consumers check that bound.
    """

    values: tuple[int, ...]
    s: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        values = tuple(self.values)
        if not values:
            raise DomainError("A degree sequence needs at least one value")
        if len(values) > MAX_LENGTH:
            raise DomainError(f"Sequence length {len(values)} exceeds the supported {MAX_LENGTH}")
        for v in values:
            if isinstance(v, bool) or not isinstance(v, int):
                raise DomainError(f"Degree values must be integers, got {v!r}")
            if v < 0:
                raise DomainError(f"Degree values must be non-negative, got {v}")
        object.__setattr__(self, "values", tuple(sorted(values, reverse=True)))
        object.__setattr__(self, "s", sum(values))

    @classmethod
    def of(cls, *values: int) -> "DegreeSequence":
        """Shortcut: ``DegreeSequence.of(3, 3, 1, 1)``."""
        return cls(values)

    @classmethod
    def from_blocks(cls, blocks: Iterable[tuple[int, int]]) -> "DegreeSequence":
        """Build from (value, count) pairs."""
        values: list[int] = []
        for value, count in blocks:
            values.extend([value] * count)
        return cls(tuple(values))

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def max_deg(self) -> int:
        return self.values[0]

    @property
    def min_deg(self) -> int:
        return self.values[-1]

    @property
    def spread(self) -> int:
        return self.values[0] - self.values[-1]

    @property
    def mean(self) -> Fraction:
        return Fraction(self.s, self.n)

    def blocks(self) -> tuple[tuple[int, int], ...]:
        """Run-length form: ((value, count), ...) with values decreasing."""
        return tuple((value, sum(1 for _ in run)) for value, run in groupby(self.values))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, index: int) -> int:
        return self.values[index]

    def __str__(self) -> str:
        return format_sequence(self)


@dataclass(frozen=True)
class SequenceStats:
    """Exact summary statistics of a degree sequence."""

    n: int
    s: int
    mean: Fraction
    max_deg: int
    min_deg: int
    spread: int
    rg: Fraction

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for serialization (rationals as "p/q")."""
        return {
            "n": self.n,
            "s": self.s,
            "mean": format_fraction(self.mean),
            "max_deg": self.max_deg,
            "min_deg": self.min_deg,
            "spread": self.spread,
            "rg": format_fraction(self.rg),
        }


def parse_sequence(text: str) -> DegreeSequence:
    """Parse ``term(,term)*`` where ``term`` is ``v`` or ``v^k`` in ASCII decimal.

    Whitespace around a term is ignored; whitespace inside one is an error, so
    ``3 3,1`` is rejected rather than read as 33. Terms may come in any order.
    Raises SequenceParseError naming the offending token.
    """
    if not text.strip():
        raise SequenceParseError("Empty sequence text", token=text)

    values: list[int] = []
    for raw in text.split(","):
        token = raw.strip()
        match = _TERM.fullmatch(token)
        if match is None:
            if token.startswith("-"):
                raise SequenceParseError(f"Negative value in term '{token}'", token=token)
            raise SequenceParseError(f"Malformed term '{token}'", token=token)
        if any(len(digits) > MAX_DIGITS for digits in match.groups() if digits):
            raise SequenceParseError(
                f"Number longer than {MAX_DIGITS} digits in term '{token[:20]}...'", token=token
            )
        value = int(match.group(1))
        repeat = int(match.group(2)) if match.group(2) is not None else 1
        if repeat == 0:
            raise SequenceParseError(f"Zero repetition in term '{token}'", token=token)
        if len(values) + repeat > MAX_LENGTH:
            raise SequenceParseError(
                f"Term '{token}' makes the sequence longer than {MAX_LENGTH}", token=token
            )
        values.extend([value] * repeat)

    return DegreeSequence(tuple(values))


def format_sequence(seq: DegreeSequence) -> str:
    """Run-length shorthand with values descending, e.g. ``5^2,1^6``."""
    return ",".join(
        str(value) if count == 1 else f"{value}^{count}" for value, count in seq.blocks()
    )


def stats(seq: DegreeSequence) -> SequenceStats:
    """Sum, mean, extremes, spread and rg (largest deviation from the mean)."""
    mean = seq.mean
    return SequenceStats(
        n=seq.n,
        s=seq.s,
        mean=mean,
        max_deg=seq.max_deg,
        min_deg=seq.min_deg,
        spread=seq.spread,
        rg=max(seq.max_deg - mean, mean - seq.min_deg),
    )


def complement(seq: DegreeSequence) -> DegreeSequence:
    """Map every value d to n-1-d; needs all values <= n-1."""
    top = seq.n - 1
    if seq.max_deg > top:
        raise DomainError(f"Value {seq.max_deg} exceeds n-1 = {top}; complement undefined")
    return DegreeSequence(tuple(top - d for d in seq.values))


def majorizes(a: DegreeSequence, b: DegreeSequence) -> bool:
    """True iff every prefix sum of ``a`` is at least the matching prefix sum of ``b``."""
    if a.n != b.n:
        raise DomainError(f"Length mismatch: {a.n} vs {b.n}")
    if a.s != b.s:
        raise DomainError(f"Sum mismatch: {a.s} vs {b.s}")
    return all(pa >= pb for pa, pb in zip(accumulate(a.values), accumulate(b.values)))


def down_transfer(seq: DegreeSequence, i: int, j: int) -> DegreeSequence:
    """Move one unit from position i to position j (0-based, canonical order).

    Needs d_i >= d_j + 2; the result is majorized by ``seq``.
    """
    for index in (i, j):
        if not 0 <= index < seq.n:
            raise DomainError(f"Position {index} outside 0..{seq.n - 1}")
    if seq[i] < seq[j] + 2:
        raise InvalidTransferError(
            f"Cannot transfer from d[{i}]={seq[i]} to d[{j}]={seq[j]}: needs a gap of 2"
        )
    values = list(seq.values)
    values[i] -= 1
    values[j] += 1
    return DegreeSequence(tuple(values))


def descend_to_near_regular(seq: DegreeSequence) -> Iterator[DegreeSequence]:
    """Walk down the majorization order by extreme transfers until spread <= 1.

    Yields every sequence after ``seq`` on the chain; each majorizes the next.
    """
    current = seq
    steps = 0
    while current.spread > 1:
        current = down_transfer(current, 0, current.n - 1)
        steps += 1
        yield current
    _log.debug(f"Reached near-regular {current} after {steps} transfers")
