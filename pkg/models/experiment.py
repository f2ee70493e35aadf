"""Experiment configuration and report row models."""

from dataclasses import dataclass, field
from typing import List, Optional

from config import (
    DEFAULT_ALPHA, DEFAULT_AST_GRID, DEFAULT_EPOCHS, DEFAULT_LEARNING_RATE,
    DEFAULT_SEED, DEFAULT_SPLIT_FRACTION, DEFAULT_T_GRID, MIN_MESSAGES_CORPUS,
    MIN_MESSAGES_MLA, SCORER_NB,
)
from models.context import ActorDetermination, TranscriptContext
from models.scores import ConfusionCounts, MlaCounts


@dataclass
class ExperimentConfig:
    """Settings of one experiment run.

    Attributes:
        scorer: One of nb, hinge, logistic, external
        scores_path: Scores file for the external scorer
        split_fraction: Training share of the inter-set split
        seed: Seed for splits and SGD shuffling
        t_grid: Message thresholds to evaluate (symmetric t)
        ast_grid: Actor significance thresholds to evaluate
        min_messages_corpus: Minimum transcript length for context experiments
        min_messages_mla: Minimum transcript length for cross-set MLA
        alpha: Naive Bayes smoothing
        epochs: SGD epochs for linear scorers
        learning_rate: SGD step size
        two_tailed: Use two-tailed p-values
        exclude_overlap: Drop training transcripts that also occur in the eval corpus
        model_name: Label written to the "model" report column
        t_adult: Optional asymmetric override of the upper band
        t_child: Optional asymmetric override of the lower band
        workers: Worker processes for transcript-level scoring (1 = serial)
    """
    scorer: str = SCORER_NB
    scores_path: Optional[str] = None
    split_fraction: float = DEFAULT_SPLIT_FRACTION
    seed: int = DEFAULT_SEED
    t_grid: List[float] = field(default_factory=lambda: list(DEFAULT_T_GRID))
    ast_grid: List[float] = field(default_factory=lambda: list(DEFAULT_AST_GRID))
    min_messages_corpus: int = MIN_MESSAGES_CORPUS
    min_messages_mla: int = MIN_MESSAGES_MLA
    alpha: float = DEFAULT_ALPHA
    epochs: int = DEFAULT_EPOCHS
    learning_rate: float = DEFAULT_LEARNING_RATE
    two_tailed: bool = False
    exclude_overlap: bool = False
    model_name: Optional[str] = None
    t_adult: Optional[float] = None
    t_child: Optional[float] = None
    workers: int = 1

    @property
    def label(self) -> str:
        """Name written to the model column of reports."""
        return self.model_name or self.scorer

    def to_dict(self) -> dict:
        return {
            "scorer": self.scorer,
            "scores_path": self.scores_path,
            "split_fraction": self.split_fraction,
            "seed": self.seed,
            "t_grid": list(self.t_grid),
            "ast_grid": list(self.ast_grid),
            "min_messages_corpus": self.min_messages_corpus,
            "min_messages_mla": self.min_messages_mla,
            "alpha": self.alpha,
            "epochs": self.epochs,
            "learning_rate": self.learning_rate,
            "two_tailed": self.two_tailed,
            "exclude_overlap": self.exclude_overlap,
            "model_name": self.model_name,
            "t_adult": self.t_adult,
            "t_child": self.t_child,
            "workers": self.workers,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ExperimentConfig":
        defaults = cls()
        return cls(**{key: data.get(key, getattr(defaults, key)) for key in defaults.to_dict()})


@dataclass
class MlaRow:
    """Message-level analysis result at one threshold pair."""
    t_adult: float
    t_child: float
    counts: MlaCounts


@dataclass
class ContextRow:
    """Context determination result at one threshold pair and AST."""
    t_adult: float
    t_child: float
    ast: float
    counts: ConfusionCounts
    f1: float
    o_pct: float
    best: bool = False


@dataclass
class DeterminationRecord:
    """Per-transcript context determination."""
    transcript_id: str
    t_adult: float
    t_child: float
    ast: float
    context: TranscriptContext
    actors: List[ActorDetermination]

    def to_dict(self, include_thresholds: bool = False) -> dict:
        """Convert to the determinations JSONL record.

        Args:
            include_thresholds: Also write t_adult, t_child and ast, needed
                when one file holds several grid points

        Returns:
            Dictionary representation of the record
        """
        record = {
            "id": self.transcript_id,
            "context": self.context.value,
            "actors": [actor.to_dict() for actor in self.actors],
        }
        if include_thresholds:
            record.update({"t_adult": self.t_adult, "t_child": self.t_child, "ast": self.ast})
        return record


@dataclass
class ExperimentReport:
    """Everything one experiment run produces.

    Attributes:
        kind: interset, crossset or sweep
        config: Configuration the run used
        mla_rows: One row per threshold pair
        context_rows: One row per threshold pair and AST
        determinations: Per-transcript records (all grid points)
        adult_share: Fraction of MLA messages whose gold role is Adult
        transcripts_evaluated: Transcripts that entered context determination
        corpus_digests: Name -> sha256 of each input corpus
    """
    kind: str
    config: ExperimentConfig
    mla_rows: List[MlaRow] = field(default_factory=list)
    context_rows: List[ContextRow] = field(default_factory=list)
    determinations: List[DeterminationRecord] = field(default_factory=list)
    adult_share: Optional[float] = None
    transcripts_evaluated: int = 0
    corpus_digests: dict = field(default_factory=dict)

    def best_row(self) -> Optional[ContextRow]:
        return next((row for row in self.context_rows if row.best), None)
