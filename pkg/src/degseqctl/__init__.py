"""degseqctl - command-line interface for degseq."""

__version__ = "0.4.0"
