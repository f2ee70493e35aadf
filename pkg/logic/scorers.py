"""Scorer interface over trained models and external score files."""

import logging
from abc import ABC, abstractmethod
from typing import Dict, List, Mapping, Optional, Tuple

from config import SCORER_EXTERNAL, SCORER_HINGE, SCORER_LOGISTIC, SCORER_NB
from data.score_file import load_external_scores
from errors import ConfigError, MissingScore
from logic.linear import score_linear, train_linear
from logic.naive_bayes import score_nb, train_nb
from models import ExperimentConfig, LinearKind, LinearModel, MessageScore, NbModel, Transcript

logger = logging.getLogger(__name__)


class Scorer(ABC):
    """Assigns every message of a transcript a score toward Adult."""

    scorer_id: str = ""

    @abstractmethod
    def score_transcript(self, transcript: Transcript) -> Dict[int, MessageScore]:
        """Score all messages of a transcript.

        Returns:
            Message ordinal -> MessageScore
        """


class NbScorer(Scorer):
    """Scores messages with a trained Naive Bayes model."""

    scorer_id = SCORER_NB

    def __init__(self, model: NbModel):
        self.model = model
        self._log_prior = model.class_log_prior()
        self._feature_log_prob = model.feature_log_prob()

    def score_transcript(self, transcript: Transcript) -> Dict[int, MessageScore]:
        cached = (self._log_prior, self._feature_log_prob)
        return {m.ordinal: score_nb(self.model, m, cached) for m in transcript.messages}


class LinearScorer(Scorer):
    """Scores messages with a trained hinge or logistic model."""

    def __init__(self, model: LinearModel):
        self.model = model
        self.scorer_id = model.kind.value

    def score_transcript(self, transcript: Transcript) -> Dict[int, MessageScore]:
        return {m.ordinal: score_linear(self.model, m) for m in transcript.messages}


class ExternalScorer(Scorer):
    """Looks scores up in a map loaded from a scores file."""

    scorer_id = SCORER_EXTERNAL

    def __init__(self, scores: Mapping[Tuple[str, int], MessageScore]):
        self.scores = scores

    @classmethod
    def from_file(cls, path: str) -> "ExternalScorer":
        return cls(load_external_scores(path))

    def score_transcript(self, transcript: Transcript) -> Dict[int, MessageScore]:
        """Scores of a transcript.

        Raises:
            MissingScore: If a message has no row in the scores file
        """
        scores = {}
        for message in transcript.messages:
            score = self.scores.get((transcript.id, message.ordinal))
            if score is None:
                raise MissingScore(f"No external score for {transcript.id} ordinal {message.ordinal}")
            scores[message.ordinal] = score
        return scores


def scorer_for_model(model) -> Scorer:
    """Wrap a trained or loaded model in its scorer."""
    if isinstance(model, NbModel):
        return NbScorer(model)
    if isinstance(model, LinearModel):
        return LinearScorer(model)
    raise TypeError(f"Unsupported model type {type(model).__name__}")


def train_model(config: ExperimentConfig, train_corpus: List[Transcript]):
    """Train the native model named by config.scorer."""
    if config.scorer == SCORER_NB:
        return train_nb(train_corpus, config.alpha)
    if config.scorer in (SCORER_HINGE, SCORER_LOGISTIC):
        return train_linear(
            train_corpus,
            kind=LinearKind(config.scorer),
            epochs=config.epochs,
            learning_rate=config.learning_rate,
            seed=config.seed,
        )
    raise ConfigError(f"Scorer {config.scorer!r} cannot be trained")


def build_scorer(config: ExperimentConfig, train_corpus: Optional[List[Transcript]] = None) -> Scorer:
    """Create the scorer an experiment runs with.

    Native scorers are trained on train_corpus; the external scorer reads
    config.scores_path and ignores the training corpus.

    Raises:
        ConfigError: If the external scorer has no scores path, the scorer
            kind is unknown, or a native scorer gets no training corpus
    """
    if config.scorer == SCORER_EXTERNAL:
        if not config.scores_path:
            raise ConfigError("The external scorer needs a scores file (--scores-file)")
        return ExternalScorer.from_file(config.scores_path)
    if train_corpus is None:
        raise ConfigError(f"Scorer {config.scorer!r} needs a training corpus")
    return scorer_for_model(train_model(config, train_corpus))
