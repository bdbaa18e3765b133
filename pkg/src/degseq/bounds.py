"""Sufficient conditions for graphicality from regularity.

Contents:
- The D function of (upper value, lower value, sum, length). D >= 1 certifies
  graphicality for any sequence with those extremes and that even sum.
- ``theorem1_certify``: the D certificate applied to (Delta, delta, s, n).
- ``theorem2_certify``: the regularity certificate, rg(pi) against a bound that
  depends on where the mean s/n sits:
      case 1  (n-2)/4 <= s/n <= (3n-2)/4   rg <= (n-2)/4
      case 2  s/n > (3n-2)/4               rg <= n-1-s/n
      case 3  s/n < (n-2)/4                rg <= s/n
- ``extremal_pair`` / ``extremal_case``: the floor/ceiling extremes that the
  case-1 argument reduces to.
- ``counterexample_family``: ((mu+c)^(n/2), (mu-c)^(n/2)), non-graphic exactly
  when c > (n-2)/4, which shows the case-1 bound is tight.

Provenance of the D formula: only its identities are known, so the closed
form below is a reconstruction. With mu = s/n,

    D(a, b, s, n) = (a-b) * [(mu-b)(n-1-2a+mu) + (a-mu)*mu] / [n (a-mu)(mu-b)]

It reproduces every known identity exactly: the symmetric value
D(mu+c, mu-c) = 2(n-(2c+1))/n, the fixed point D = 1 at c = (n-2)/4, the
width and sum-shift differences, complement invariance and the floor form.
tests/unit/test_d_identities.py gates on all of them.

All comparisons are exact (Fraction / int cross-multiplication).
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from numbers import Rational
from typing import Any

from degseq.errors import DomainError, NotApplicableError
from degseq.rational import as_fraction, format_fraction
from degseq.sequence import DegreeSequence, stats


_log = logging.getLogger("bounds")


class CertificateStatus(Enum):
    """Outcome of a sufficient-condition certifier."""

    CERTIFIED_GRAPHIC = "certified_graphic"
    INCONCLUSIVE = "inconclusive"
    NOT_APPLICABLE = "not_applicable"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class CertificateOutcome:
    """Certifier result together with the quantities it computed.

    Only the fields relevant to the certifier are set:
    theorem1 -> d_value; theorem2 -> case, mean, rg, bound;
    difference -> mean, spread, bound.
    """

    certifier: str
    status: CertificateStatus
    reason: str
    d_value: Fraction | None = None
    case: int | None = None
    mean: Fraction | None = None
    rg: Fraction | None = None
    bound: Fraction | None = None
    spread: int | None = None

    @property
    def certified(self) -> bool:
        return self.status is CertificateStatus.CERTIFIED_GRAPHIC

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for serialization (rationals as "p/q")."""
        result: dict[str, Any] = {"status": self.status.value, "reason": self.reason}
        if self.d_value is not None:
            result["d_value"] = format_fraction(self.d_value)
        if self.case is not None:
            result["thm2_case"] = self.case
        if self.mean is not None:
            result["mean"] = format_fraction(self.mean)
        if self.rg is not None:
            result["rg"] = format_fraction(self.rg)
        if self.spread is not None:
            result["spread"] = self.spread
        if self.bound is not None:
            result["bound"] = format_fraction(self.bound)
        return result


@dataclass(frozen=True)
class DFunctionInput:
    """Arguments of the D function.

    ``a`` plays the role of the largest value, ``b`` the smallest. Rational
    a, b and s are allowed so the identities can be evaluated at mu +- c.
    Requires n >= 1, a >= b and n*a > s > n*b.
    """

    a: Rational | int
    b: Rational | int
    s: Rational | int
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"n must be >= 1, got {self.n}")
        a, b, s = as_fraction(self.a), as_fraction(self.b), as_fraction(self.s)
        if a < b:
            raise DomainError(f"Upper value {a} is below lower value {b}")
        if s == self.n * a or s == self.n * b:
            raise NotApplicableError(
                f"s = {s} lies on the edge of the window ({self.n * b}, {self.n * a})"
            )
        if not self.n * b < s < self.n * a:
            raise DomainError(f"s = {s} outside the window ({self.n * b}, {self.n * a})")


def d_function(params: DFunctionInput) -> Fraction:
    """Exact value of D(a, b, s, n)."""
    a, b, s = as_fraction(params.a), as_fraction(params.b), as_fraction(params.s)
    n = params.n
    mu = s / n
    numerator = (a - b) * ((mu - b) * (n - 1 - 2 * a + mu) + (a - mu) * mu)
    return numerator / (n * (a - mu) * (mu - b))


def d_value(a: Rational | int, b: Rational | int, s: Rational | int, n: int) -> Fraction:
    """Shortcut for ``d_function(DFunctionInput(a, b, s, n))``."""
    return d_function(DFunctionInput(a, b, s, n))


def floor_form(s: int, n: int, c: Rational | int) -> Fraction:
    """D(floor(s/n)+c, floor(s/n)-c, s, n) written through floor and fractional part.

    2c * [(cn - c - 2c^2) + {s/n}(n - 2 floor(s/n) - 1)] / [n (c + {s/n})(c - {s/n})]
    """
    c = as_fraction(c)
    floor_mean = s // n
    frac = Fraction(s % n, n)
    numerator = (c * n - c - 2 * c * c) + frac * (n - 2 * floor_mean - 1)
    return 2 * c * numerator / (n * (c + frac) * (c - frac))


def in_mean_window(s: int, n: int) -> bool:
    """(n-2)/4 <= s/n <= (3n-2)/4, closed on both ends."""
    return n * (n - 2) <= 4 * s <= n * (3 * n - 2)


def mn_bounds(n: int) -> tuple[Fraction, Fraction]:
    """Simple bounds (n-2)/4 <= m(n) <= (n-2)/2."""
    return Fraction(n - 2, 4), Fraction(n - 2, 2)


def _not_applicable_reason(seq: DegreeSequence) -> str | None:
    """Why neither certifier can run on ``seq``, or None."""
    if seq.s % 2:
        return "odd sum"
    if seq.max_deg > seq.n - 1:
        return f"value {seq.max_deg} exceeds n-1 = {seq.n - 1}"
    return None


def theorem1_certify(seq: DegreeSequence) -> CertificateOutcome:
    """Certify via D(Delta, delta, s, n) >= 1.

    Regular sequences (s = n*Delta) fall outside D's window; with an even sum
    they are graphic, so they are certified directly.
    """
    reason = _not_applicable_reason(seq)
    if reason is not None:
        return CertificateOutcome("theorem1", CertificateStatus.NOT_APPLICABLE, reason)

    n, s = seq.n, seq.s
    if s == n * seq.max_deg or s == n * seq.min_deg:
        return CertificateOutcome("theorem1", CertificateStatus.CERTIFIED_GRAPHIC, "regular")

    value = d_value(seq.max_deg, seq.min_deg, s, n)
    if value >= 1:
        return CertificateOutcome(
            "theorem1", CertificateStatus.CERTIFIED_GRAPHIC, "D >= 1", d_value=value
        )
    return CertificateOutcome("theorem1", CertificateStatus.INCONCLUSIVE, "D < 1", d_value=value)


def theorem2_case(s: int, n: int) -> int:
    """Which mean range s/n falls in (boundary (3n-2)/4 belongs to case 1)."""
    if in_mean_window(s, n):
        return 1
    if 4 * s > n * (3 * n - 2):
        return 2
    return 3


def theorem2_certify(seq: DegreeSequence) -> CertificateOutcome:
    """Certify via rg(pi) against the bound for the mean's range."""
    reason = _not_applicable_reason(seq)
    if reason is not None:
        return CertificateOutcome("theorem2", CertificateStatus.NOT_APPLICABLE, reason)

    summary = stats(seq)
    n, mean = seq.n, summary.mean
    case = theorem2_case(seq.s, n)
    if case == 1:
        bound = Fraction(n - 2, 4)
    elif case == 2:
        bound = n - 1 - mean
    else:
        bound = mean

    detail = dict(case=case, mean=mean, rg=summary.rg, bound=bound)
    if summary.rg <= bound:
        return CertificateOutcome(
            "theorem2", CertificateStatus.CERTIFIED_GRAPHIC, f"rg <= bound (case {case})", **detail
        )
    return CertificateOutcome(
        "theorem2", CertificateStatus.INCONCLUSIVE, f"rg > bound (case {case})", **detail
    )


def _check_extremal_domain(s: int, n: int):
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    if not 0 <= s <= n * (n - 1):
        raise DomainError(f"s = {s} outside 0..n(n-1) = {n * (n - 1)}")
    if not in_mean_window(s, n):
        raise DomainError(f"Mean {Fraction(s, n)} outside [(n-2)/4, (3n-2)/4] for n = {n}")


def extremal_pair(s: int, n: int) -> tuple[int, int]:
    """(floor(s/n + (n-2)/4), ceil(s/n - (n-2)/4)) by integer arithmetic."""
    _check_extremal_domain(s, n)
    width = n * (n - 2)
    upper = (4 * s + width) // (4 * n)
    lower = -((width - 4 * s) // (4 * n))
    return upper, lower


def extremal_case(s: int, n: int) -> int:
    """Classify (s, n) into the four floor/ceiling combinations.

    With F = floor(s/n), X = floor((n-2)/4) and fractional parts f, x:
        case 1: (F+X,   F-X)      f + x < 1 and f <= x
        case 2: (F+X+1, F-X+1)    f + x >= 1 and f > x
        case 3: (F+X+1, F-X)      f + x >= 1 and f <= x
        case 4: (F+X,   F-X+1)    f + x < 1 and f > x
    """
    _check_extremal_domain(s, n)
    frac_mean = Fraction(s % n, n)
    quarter = Fraction(n - 2, 4)
    frac_quarter = quarter - math.floor(quarter)
    carries_up = frac_mean + frac_quarter >= 1
    carries_low = frac_mean > frac_quarter
    if carries_up and carries_low:
        return 2
    if carries_up:
        return 3
    if carries_low:
        return 4
    return 1


def family_predicted_graphic(n: int, c: int) -> bool:
    """The family with half-width c is graphic iff c <= (n-2)/4."""
    return 4 * c <= n - 2


def counterexample_family(n: int, mu: int, c: int) -> DegreeSequence:
    """((mu+c)^(n/2), (mu-c)^(n/2)) for even n.

    Non-graphic exactly when c > (n-2)/4 (see ``family_predicted_graphic``).
    """
    if n < 2 or n % 2:
        raise DomainError(f"n must be even and >= 2, got {n}")
    if c < 0:
        raise DomainError(f"c must be >= 0, got {c}")
    if mu - c < 0:
        raise DomainError(f"mu - c = {mu - c} is negative")
    if mu + c > n - 1:
        raise DomainError(f"mu + c = {mu + c} exceeds n-1 = {n - 1}")
    half = n // 2
    _log.debug(f"Family n={n} mu={mu} c={c}, predicted graphic: {family_predicted_graphic(n, c)}")
    return DegreeSequence.from_blocks(((mu + c, half), (mu - c, half)))
