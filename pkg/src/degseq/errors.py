"""Exception hierarchy for degseq.

Non-graphic and inconclusive results are values (see ``graphicality.Verdict`` and
``bounds.CertificateOutcome``); exceptions are reserved for malformed input and
calls outside an operation's domain.
"""


class DegreeSequenceError(ValueError):
    """Base class for all degseq errors."""


class SequenceParseError(DegreeSequenceError):
    """Sequence text could not be parsed.

    Attributes:
        token: The offending term (or the whole text for empty input)
    """

    def __init__(self, message: str, token: str):
        super().__init__(message)
        self.token = token


class DomainError(DegreeSequenceError):
    """Arguments fall outside the operation's domain (lengths, sums, ranges)."""


class NotApplicableError(DomainError):
    """The D function is undefined: s lies on the edge of the (n*b, n*a) window."""


class InvalidTransferError(DomainError):
    """A down transfer needs d_i >= d_j + 2."""


class ConfigurationError(DegreeSequenceError):
    """Configuration value cannot be used."""


class SearchRefusedError(DegreeSequenceError):
    """Search request exceeds the configured cost guard."""
