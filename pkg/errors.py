"""Error types for the AC context detector.

ConfigError maps to CLI exit code 1, DataError to exit code 2.
"""

from typing import Optional


class DetectorError(Exception):
    """Base class for all detector errors."""


class ConfigError(DetectorError):
    """Invalid thresholds, grids, hyperparameters or CLI combinations."""


class DataError(DetectorError):
    """Input data could not be used."""


# ============================================================================
# Corpus
# ============================================================================

class MalformedPage(DataError):
    """No message lines could be extracted from a PJ page."""


class NoSenderFound(DataError):
    """A chat line carries no sender delimiter."""


class EmailTranscript(DataError):
    """The PJ page is an e-mail exchange and is excluded from ingestion."""


class MalformedXml(DataError):
    """The PAN12 conversations file is not well-formed."""


class MalformedRecord(DataError):
    """A canonical JSONL record is invalid.

    Attributes:
        line_number: 1-based line number of the offending record
    """

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class EmptyCorpus(DataError):
    """An operation that needs transcripts received none."""


# ============================================================================
# Scoring
# ============================================================================

class MalformedRow(MalformedRecord):
    """A scores-file row is invalid."""


class DuplicateKey(DataError):
    """A (transcript_id, ordinal) key occurs twice in a scores file."""


class ScoreOutOfRange(DataError):
    """A score lies outside [0, 1]."""


class EmptyTrainingSet(DataError):
    """No Adult/Child labeled messages were available for training."""


class MissingGoldLabel(DataError):
    """A message without Adult/Child gold label reached evaluation."""


class ModelFormatError(DataError):
    """A persisted model file has an unknown kind or format version."""


# ============================================================================
# Context and metrics
# ============================================================================

class MissingScore(DataError):
    """A transcript message has no score."""


class NotPeerToPeer(DataError):
    """A transcript does not have exactly two actors."""


class UnknownLabel(DataError):
    """A transcript without a Positive/Negative label reached scoring."""


class DivisionByZeroReference(DataError):
    """A rate change was requested against a zero reference count."""


class EmptyEvaluation(DataError):
    """Percentages were requested over zero messages."""
