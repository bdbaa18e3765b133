"""Embedded m(n) table (n = 4..100) with witness validation and re-verification."""

import csv
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any

from degseq.bounds import CertificateOutcome, CertificateStatus, in_mean_window, mn_bounds
from degseq.errors import DomainError
from degseq.graphicality import erdos_gallai_check
from degseq.search.engine import SearchConfig, SearchMode, SearchRow, compute_rows
from degseq.sequence import DegreeSequence, format_sequence


_log = logging.getLogger("table")

TABLE_MIN_N = 4
TABLE_MAX_N = 100


def load_table(path: str | Path | None = None) -> list[SearchRow]:
    """Read ``n,m,witness`` rows, from the packaged CSV unless ``path`` is given."""
    if path is None:
        source = resources.files("degseq.search").joinpath("data/table1.csv")
        text = source.read_text(encoding="utf-8")
        origin = "embedded table"
    else:
        text = Path(path).read_text(encoding="utf-8")
        origin = str(path)

    rows = [SearchRow.from_dict(record) for record in csv.DictReader(text.splitlines())]
    _log.debug(f"Loaded {len(rows)} rows from {origin}")
    return rows


def table_by_n(rows: list[SearchRow]) -> dict[int, SearchRow]:
    """Index rows by n (a later duplicate wins)."""
    return {row.n: row for row in rows}


def validate_witness(row: SearchRow) -> list[str]:
    """Checks a witness must pass; returns the failed ones (empty when valid)."""
    witness, n = row.witness, row.n
    failures = []
    if witness.n != n:
        failures.append(f"length {witness.n} != n")
    if witness.s % 2:
        failures.append(f"odd sum {witness.s}")
    if not in_mean_window(witness.s, n):
        failures.append(f"mean {Fraction(witness.s, n)} outside window")
    if witness.spread != row.m + 1:
        failures.append(f"spread {witness.spread} != m+1 = {row.m + 1}")
    if erdos_gallai_check(witness).graphic:
        failures.append("witness is graphic")
    return failures


def bound_failures(row: SearchRow) -> list[str]:
    """(n-2)/4 <= m(n) <= (n-2)/2."""
    lower, upper = mn_bounds(row.n)
    if lower <= row.m <= upper:
        return []
    return [f"m={row.m} outside [{lower}, {upper}]"]


@dataclass(frozen=True)
class RowCheck:
    """Verification of one table row against a recomputation."""

    n: int
    expected_m: int
    computed: SearchRow | None
    failures: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for serialization."""
        result: dict[str, Any] = {"n": self.n, "expected_m": self.expected_m}
        if self.computed is not None:
            result["m"] = self.computed.m
            result["witness"] = format_sequence(self.computed.witness)
        result["status"] = self.status
        if self.failures:
            result["failures"] = list(self.failures)
        return result


@dataclass(frozen=True)
class VerificationReport:
    """Per-row results of ``verify_table``."""

    mode: SearchMode
    rows: tuple[RowCheck, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)

    @property
    def failed_rows(self) -> list[RowCheck]:
        return [row for row in self.rows if not row.passed]


def verify_table(
    n_from: int,
    n_to: int,
    mode: SearchMode = SearchMode.FAST,
    jobs: int = 1,
    table: list[SearchRow] | None = None,
    check_monotone: bool = True,
) -> VerificationReport:
    """Recompute m(n) over [n_from, n_to] and compare with the table.

    Each table witness is validated independently of the recomputation; the
    recomputed witness is validated too. Mismatches are report entries.
    """
    if not TABLE_MIN_N <= n_from <= n_to <= TABLE_MAX_N:
        raise DomainError(
            f"Range {n_from}..{n_to} outside the table range {TABLE_MIN_N}..{TABLE_MAX_N}"
        )
    expected = table_by_n(table if table is not None else load_table())
    missing = [n for n in range(n_from, n_to + 1) if n not in expected]
    if missing:
        raise DomainError(f"Table has no rows for n = {missing}")

    config = SearchConfig(
        mode=mode, n_from=n_from, n_to=n_to, jobs=jobs, check_monotone=check_monotone
    )
    computed_rows = compute_rows(config)

    checks = []
    for computed in computed_rows:
        reference = expected[computed.n]
        failures = [f"table witness: {msg}" for msg in validate_witness(reference)]
        if computed.m != reference.m:
            failures.append(f"computed m={computed.m} != table m={reference.m}")
        failures += [f"computed witness: {msg}" for msg in validate_witness(computed)]
        failures += bound_failures(computed)
        if failures:
            _log.warning(f"n={computed.n}: {'; '.join(failures)}")
        checks.append(RowCheck(computed.n, reference.m, computed, tuple(failures)))

    report = VerificationReport(mode=mode, rows=tuple(checks))
    _log.info(f"Verified {len(checks)} rows, {len(report.failed_rows)} failed")
    return report


def difference_certify(seq: DegreeSequence, table: list[SearchRow]) -> CertificateOutcome:
    """Spread <= m(n) certifies graphicality for an even-sum sequence with mean in the window."""
    if seq.s % 2:
        return CertificateOutcome("difference", CertificateStatus.NOT_APPLICABLE, "odd sum")
    if seq.max_deg > seq.n - 1:
        return CertificateOutcome(
            "difference", CertificateStatus.NOT_APPLICABLE, f"value {seq.max_deg} exceeds n-1"
        )
    if not in_mean_window(seq.s, seq.n):
        return CertificateOutcome(
            "difference", CertificateStatus.NOT_APPLICABLE, "mean outside [(n-2)/4, (3n-2)/4]"
        )
    row = table_by_n(table).get(seq.n)
    if row is None:
        return CertificateOutcome(
            "difference", CertificateStatus.NOT_APPLICABLE, f"no m(n) known for n={seq.n}"
        )

    bound = Fraction(row.m)
    if seq.spread <= row.m:
        return CertificateOutcome(
            "difference",
            CertificateStatus.CERTIFIED_GRAPHIC,
            f"spread <= m({seq.n})",
            mean=seq.mean,
            spread=seq.spread,
            bound=bound,
        )
    return CertificateOutcome(
        "difference",
        CertificateStatus.INCONCLUSIVE,
        f"spread > m({seq.n})",
        mean=seq.mean,
        spread=seq.spread,
        bound=bound,
    )
