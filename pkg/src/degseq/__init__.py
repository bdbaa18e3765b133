"""degseq - graphicality of degree sequences from regularity."""

from degseq.bounds import theorem1_certify, theorem2_certify
from degseq.errors import DegreeSequenceError, DomainError, SequenceParseError
from degseq.graphicality import erdos_gallai_check, havel_hakimi_realize, is_graphic
from degseq.sequence import DegreeSequence, format_sequence, parse_sequence, stats

__version__ = "0.4.0"

__all__ = [
    "DegreeSequence",
    "DegreeSequenceError",
    "DomainError",
    "SequenceParseError",
    "erdos_gallai_check",
    "format_sequence",
    "havel_hakimi_realize",
    "is_graphic",
    "parse_sequence",
    "stats",
    "theorem1_certify",
    "theorem2_certify",
]
