"""Score and count models for message- and transcript-level evaluation."""

from dataclasses import dataclass
from enum import Enum


class MlaOutcome(Enum):
    """Message-level analysis outcome."""
    TP = "tp"   # prediction matches gold role
    IA = "ia"   # predicted Adult, gold Child
    IC = "ic"   # predicted Child, gold Adult
    O = "o"     # omitted


class Outcome(Enum):
    """Transcript-level confusion outcome."""
    TP = "tp"
    FP = "fp"
    TN = "tn"
    FN = "fn"


@dataclass(frozen=True)
class MessageScore:
    """Score of one message toward Adult (1.0) versus Child (0.0).

    Attributes:
        value: Score in [0, 1]
        scorer_id: Name of the scorer that produced the value
    """
    value: float
    scorer_id: str

    def __post_init__(self) -> None:
        if not 0.0 <= self.value <= 1.0:
            raise ValueError(f"Score {self.value} outside [0, 1]")


@dataclass
class MlaCounts:
    """Message-level analysis tallies.

    Attributes:
        tp: Correct determinations
        ia: Incorrect Adult determinations
        ic: Incorrect Child determinations
        o: Omitted messages
        total: All evaluated messages
    """
    tp: int = 0
    ia: int = 0
    ic: int = 0
    o: int = 0
    total: int = 0

    @property
    def included(self) -> int:
        return self.total - self.o

    def add(self, outcome: MlaOutcome) -> None:
        """Record one message outcome."""
        setattr(self, outcome.value, getattr(self, outcome.value) + 1)
        self.total += 1

    def merge(self, other: "MlaCounts") -> "MlaCounts":
        """Return the sum of two tallies."""
        return MlaCounts(
            tp=self.tp + other.tp,
            ia=self.ia + other.ia,
            ic=self.ic + other.ic,
            o=self.o + other.o,
            total=self.total + other.total,
        )

    def to_dict(self) -> dict:
        return {"tp": self.tp, "ia": self.ia, "ic": self.ic, "o": self.o, "total": self.total}


@dataclass
class ConfusionCounts:
    """Transcript-level confusion tallies."""
    tp: int = 0
    fp: int = 0
    tn: int = 0
    fn: int = 0

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.tn + self.fn

    def add(self, outcome: Outcome) -> None:
        """Record one transcript outcome."""
        setattr(self, outcome.value, getattr(self, outcome.value) + 1)

    def merge(self, other: "ConfusionCounts") -> "ConfusionCounts":
        """Return the sum of two tallies."""
        return ConfusionCounts(
            tp=self.tp + other.tp,
            fp=self.fp + other.fp,
            tn=self.tn + other.tn,
            fn=self.fn + other.fn,
        )

    def precision(self) -> float:
        denominator = self.tp + self.fp
        return self.tp / denominator if denominator else 0.0

    def recall(self) -> float:
        denominator = self.tp + self.fn
        return self.tp / denominator if denominator else 0.0

    def to_dict(self) -> dict:
        return {"tp": self.tp, "fp": self.fp, "tn": self.tn, "fn": self.fn}
