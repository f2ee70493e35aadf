"""Linear message scorers trained with stochastic gradient descent.

Hinge loss gives an SVM-style model with hard 0/1 scores; log loss gives a
logistic model with calibrated scores in (0, 1).
"""

import logging
from typing import List

import numpy as np
from scipy.special import expit

from config import DEFAULT_EPOCHS, DEFAULT_LEARNING_RATE, DEFAULT_SEED
from errors import ConfigError
from logic.naive_bayes import labeled_messages
from logic.tokenizer import build_vocabulary, featurize
from models import LinearKind, LinearModel, Message, MessageScore, Role, Transcript

logger = logging.getLogger(__name__)


def train_linear(
    corpus: List[Transcript],
    kind: LinearKind = LinearKind.HINGE,
    epochs: int = DEFAULT_EPOCHS,
    learning_rate: float = DEFAULT_LEARNING_RATE,
    seed: int = DEFAULT_SEED
) -> LinearModel:
    """Train a linear model over bag-of-words counts.

    Each epoch visits the labeled messages in a fresh seeded permutation.
    Adult is the positive class (+1), Child the negative class (-1).

    Args:
        corpus: Training transcripts
        kind: HINGE or LOGISTIC loss
        epochs: Passes over the data, >= 1
        learning_rate: Step size, > 0
        seed: Seed of the shuffling generator

    Returns:
        Trained LinearModel

    Raises:
        ConfigError: If epochs < 1 or learning_rate <= 0
        EmptyTrainingSet: If the corpus holds no labeled message
    """
    if epochs < 1:
        raise ConfigError(f"epochs must be >= 1, got {epochs}")
    if not learning_rate > 0:
        raise ConfigError(f"learning_rate must be > 0, got {learning_rate}")

    messages = labeled_messages(corpus)
    vocabulary = build_vocabulary(m.text for m in messages)
    features = [featurize(m.text, vocabulary) for m in messages]
    targets = np.array([1.0 if m.gold_role is Role.ADULT else -1.0 for m in messages])

    weights = np.zeros(len(vocabulary), dtype=np.float64)
    bias = 0.0
    rng = np.random.default_rng(seed)

    for epoch in range(epochs):
        mistakes = 0
        for position in rng.permutation(len(messages)):
            indices, counts = features[position]
            y = targets[position]
            decision = float(weights[indices] @ counts) + bias
            if y * decision <= 0:
                mistakes += 1
            if kind is LinearKind.HINGE:
                if y * decision < 1.0:
                    weights[indices] += learning_rate * y * counts
                    bias += learning_rate * y
            else:
                step = learning_rate * y * float(expit(-y * decision))
                weights[indices] += step * counts
                bias += step
        logger.debug(f"{kind.value} epoch {epoch + 1}/{epochs}: {mistakes} margin errors")

    logger.info(f"Trained {kind.value} model on {len(messages)} messages ({len(vocabulary)} tokens)")
    return LinearModel(vocabulary=vocabulary, weights=weights, bias=bias, kind=kind)


def score_linear(model: LinearModel, message: Message) -> MessageScore:
    """Score a message with a linear model.

    Hinge models return 1.0 when the decision value is >= 0 and 0.0
    otherwise; logistic models return the sigmoid of the decision value.
    """
    indices, counts = featurize(message.text, model.vocabulary)
    return MessageScore(value=decision_to_score(model.kind, model.decision(indices, counts)),
                        scorer_id=model.kind.value)


def decision_to_score(kind: LinearKind, decision: float) -> float:
    """Map a decision value to a score in [0, 1]."""
    if kind is LinearKind.HINGE:
        return 1.0 if decision >= 0 else 0.0
    return float(expit(decision))
