"""Tests for sequence parsing, statistics, complement and majorization."""

import csv
from fractions import Fraction
from importlib import resources

import pytest

from degseq.errors import DomainError, InvalidTransferError, SequenceParseError
from degseq.rational import as_fraction, format_fraction, fractional_part
from degseq.sequence import (
    MAX_LENGTH,
    DegreeSequence,
    complement,
    descend_to_near_regular,
    down_transfer,
    format_sequence,
    majorizes,
    parse_sequence,
    stats,
)
from tests.helpers.oracles import all_sequences


class TestDegreeSequence:
    """Canonical order, derived values and validation."""

    def test_canonical_order(self):
        assert DegreeSequence((1, 3, 2)).values == (3, 2, 1)
        assert DegreeSequence((1, 3, 2)) == DegreeSequence.of(3, 2, 1)

    def test_derived_values(self):
        seq = DegreeSequence.of(4, 4, 4, 2, 2)
        assert seq.n == 5
        assert seq.s == 16
        assert seq.max_deg == 4
        assert seq.min_deg == 2
        assert seq.spread == 2
        assert seq.mean == Fraction(16, 5)

    def test_from_blocks(self):
        assert DegreeSequence.from_blocks([(5, 2), (1, 6)]).values == (5, 5, 1, 1, 1, 1, 1, 1)

    def test_blocks(self):
        assert DegreeSequence.of(5, 5, 4, 1, 1, 1).blocks() == ((5, 2), (4, 1), (1, 3))

    @pytest.mark.parametrize("values", [(), (3, -1), (2, 1.5), (True, 1)])
    def test_rejects_invalid_values(self, values):
        """Empty, negative, non-integer and bool entries."""
        with pytest.raises(DomainError):
            DegreeSequence(values)


class TestParseSequence:
    def test_repetition(self):
        assert parse_sequence("1^6,5^2").values == (5, 5, 1, 1, 1, 1, 1, 1)

    def test_whitespace_ignored(self):
        """Blanks around a term are dropped."""
        assert parse_sequence(" 3 , 3,1 ,\t1 ").values == (3, 3, 1, 1)

    @pytest.mark.parametrize(
        ("text", "token"),
        [("3 3,1", "3 3"), ("3 3 1 1", "3 3 1 1"), ("2^ 3", "2^ 3"), ("1,4 ^2", "4 ^2")],
    )
    def test_whitespace_inside_term_rejected(self, text, token):
        """Digits on both sides of a blank are never glued into one number."""
        with pytest.raises(SequenceParseError) as info:
            parse_sequence(text)
        assert info.value.token == token

    @pytest.mark.parametrize("text", ["３,１", "٣", "2^２"])
    def test_non_ascii_digits_rejected(self, text):
        """Only ASCII decimal digits are numbers."""
        with pytest.raises(SequenceParseError):
            parse_sequence(text)

    def test_oversized_number_is_parse_error(self):
        """An overlong number is a parse error on its own term."""
        huge = "9" * 5000
        with pytest.raises(SequenceParseError) as info:
            parse_sequence(f"1,{huge}")
        assert info.value.token == huge
        with pytest.raises(SequenceParseError):
            parse_sequence(f"1^{huge}")

    def test_mixed_terms(self):
        assert parse_sequence("1^8,4,6^3") == DegreeSequence((6, 6, 6, 4) + (1,) * 8)

    @pytest.mark.parametrize(
        ("text", "token"),
        [
            ("3,-1", "-1"),
            ("3,a", "a"),
            ("3^", "3^"),
            ("3,,1", ""),
            ("2^0", "2^0"),
            ("1.5", "1.5"),
        ],
    )
    def test_bad_token_reported(self, text, token):
        """The offending term is carried on the error."""
        with pytest.raises(SequenceParseError) as info:
            parse_sequence(text)
        assert info.value.token == token

    def test_empty(self):
        with pytest.raises(SequenceParseError, match="Empty"):
            parse_sequence("   ")

    def test_too_long(self):
        with pytest.raises(SequenceParseError):
            parse_sequence(f"0^{MAX_LENGTH + 1}")

    def test_format_round_trip(self):
        for text in ["5^2,1^6", "3^4", "4^3,2^2", "51^38,24,8^61"]:
            assert format_sequence(parse_sequence(text)) == text

    def test_round_trip_on_table_witnesses(self):
        """Every witness string of the embedded table survives parse -> format -> parse."""
        source = resources.files("degseq.search").joinpath("data/table1.csv")
        records = list(csv.DictReader(source.read_text(encoding="utf-8").splitlines()))
        assert len(records) == 97
        for record in records:
            parsed = parse_sequence(record["witness"])
            text = format_sequence(parsed)
            assert parse_sequence(text) == parsed
            assert format_sequence(parse_sequence(text)) == text
            assert parsed.n == int(record["n"])

    def test_format_sorts_descending(self):
        assert format_sequence(parse_sequence("1^6,5^2")) == "5^2,1^6"
        assert str(parse_sequence("1,2,2")) == "2^2,1"


class TestStats:
    def test_regular(self):
        summary = stats(parse_sequence("3^4"))
        assert summary.mean == 3
        assert summary.rg == 0
        assert summary.spread == 0

    def test_rg_is_largest_deviation(self):
        """rg = max(Delta - mean, mean - delta)."""
        summary = stats(parse_sequence("5^2,1^6"))
        assert summary.s == 16
        assert summary.mean == 2
        assert summary.rg == 3

    def test_rational_mean(self):
        summary = stats(parse_sequence("4^3,2^2"))
        assert summary.mean == Fraction(16, 5)
        assert summary.rg == Fraction(6, 5)

    def test_to_dict_uses_fraction_strings(self):
        assert stats(parse_sequence("4^3,2^2")).to_dict() == {
            "n": 5,
            "s": 16,
            "mean": "16/5",
            "max_deg": 4,
            "min_deg": 2,
            "spread": 2,
            "rg": "6/5",
        }


class TestComplement:
    def test_values(self):
        assert complement(DegreeSequence.of(3, 3, 1, 1)).values == (2, 2, 0, 0)

    def test_involution(self):
        for seq in all_sequences(6):
            assert complement(complement(seq)) == seq

    def test_value_above_range(self):
        with pytest.raises(DomainError):
            complement(DegreeSequence.of(5, 1, 1))

    def test_sum_and_rg(self):
        """Complementing maps s to n(n-1)-s and keeps rg."""
        for n in range(1, 8):
            for seq in all_sequences(n):
                other = complement(seq)
                assert other.s == n * (n - 1) - seq.s
                assert stats(other).rg == stats(seq).rg

    def test_sum_and_rg_on_table_witnesses(self, table_rows):
        for row in table_rows:
            other = complement(row.witness)
            assert other.s == row.n * (row.n - 1) - row.witness.s
            assert stats(other).rg == stats(row.witness).rg
            assert other.spread == row.witness.spread


class TestMajorization:
    def test_prefix_dominance(self):
        a = DegreeSequence.of(3, 1, 1, 1)
        b = DegreeSequence.of(2, 2, 1, 1)
        assert majorizes(a, b)
        assert not majorizes(b, a)
        assert majorizes(a, a)

    def test_mismatch_rejected(self):
        with pytest.raises(DomainError):
            majorizes(DegreeSequence.of(2, 2), DegreeSequence.of(2, 1, 1))
        with pytest.raises(DomainError):
            majorizes(DegreeSequence.of(2, 2), DegreeSequence.of(2, 1))

    def test_down_transfer(self):
        assert down_transfer(DegreeSequence.of(4, 2, 2, 0), 0, 3).values == (3, 2, 2, 1)

    def test_down_transfer_needs_gap(self):
        """A gap below 2 is refused."""
        with pytest.raises(InvalidTransferError):
            down_transfer(DegreeSequence.of(3, 2, 2, 1), 1, 2)

    def test_down_transfer_bad_index(self):
        with pytest.raises(DomainError):
            down_transfer(DegreeSequence.of(3, 1), 0, 2)

    def test_transfer_result_is_majorized(self):
        for seq in all_sequences(6):
            if seq.spread >= 2:
                lower = down_transfer(seq, 0, seq.n - 1)
                assert majorizes(seq, lower)

    def test_descend_reaches_near_regular(self):
        """Each step is majorized by the one before; the sum never changes."""
        seq = DegreeSequence.of(6, 0, 0, 0, 0, 0, 0)
        chain = [seq, *descend_to_near_regular(seq)]
        assert chain[-1].spread <= 1
        assert all(chain[-1].s == item.s for item in chain)
        for upper, lower in zip(chain, chain[1:]):
            assert majorizes(upper, lower)

    def test_descend_from_near_regular_is_empty(self):
        assert list(descend_to_near_regular(DegreeSequence.of(2, 2, 1))) == []


class TestRational:
    def test_format(self):
        assert format_fraction(5) == "5/1"
        assert format_fraction(Fraction(-3, 4)) == "-3/4"

    def test_fractional_part(self):
        """Always in [0, 1), negatives included."""
        assert fractional_part(Fraction(7, 2)) == Fraction(1, 2)
        assert fractional_part(Fraction(-1, 3)) == Fraction(2, 3)
        assert fractional_part(4) == 0

    @pytest.mark.parametrize("value", [0.5, True, "1"])
    def test_refuses_inexact(self, value):
        with pytest.raises(TypeError):
            as_fraction(value)
