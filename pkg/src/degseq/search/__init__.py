"""m(n) search: fast and exhaustive engines plus the embedded table."""

from .engine import (
    SearchConfig,
    SearchMode,
    SearchRow,
    best_witness,
    compute_mn_exhaustive,
    compute_mn_fast,
    compute_rows,
    exists_nongraphic_with_spread,
    maximal_sequence,
)
from .enumeration import enumerate_bounded_sequences
from .table import (
    VerificationReport,
    difference_certify,
    load_table,
    validate_witness,
    verify_table,
)


__all__ = [
    "SearchConfig",
    "SearchMode",
    "SearchRow",
    "best_witness",
    "compute_mn_exhaustive",
    "compute_mn_fast",
    "compute_rows",
    "exists_nongraphic_with_spread",
    "maximal_sequence",
    "enumerate_bounded_sequences",
    "VerificationReport",
    "difference_certify",
    "load_table",
    "validate_witness",
    "verify_table",
]
