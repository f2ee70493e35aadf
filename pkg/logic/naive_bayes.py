"""Multinomial Naive Bayes message scorer.

Same formulation as ``sklearn.naive_bayes.MultinomialNB``: additive
smoothing over token counts, class priors from message counts, and tokens
outside the training vocabulary ignored at scoring time.
"""

import logging
from typing import List, Optional, Tuple

import numpy as np
from scipy.special import expit

from config import DEFAULT_ALPHA, SCORER_NB
from errors import ConfigError, EmptyTrainingSet
from logic.tokenizer import build_vocabulary, featurize
from models import Message, MessageScore, NbModel, Role, Transcript
from models.classifier import ADULT, CHILD

logger = logging.getLogger(__name__)


def labeled_messages(corpus: List[Transcript]) -> List[Message]:
    """Messages with an Adult or Child gold role, in corpus order.

    Raises:
        EmptyTrainingSet: If no labeled message exists
    """
    messages = [m for t in corpus for m in t.messages if m.is_labeled()]
    skipped = sum(len(t.messages) for t in corpus) - len(messages)
    if skipped:
        logger.info(f"Skipping {skipped} messages without Adult/Child label for training")
    if not messages:
        raise EmptyTrainingSet("No Adult/Child labeled messages to train on")
    return messages


def train_nb(corpus: List[Transcript], alpha: float = DEFAULT_ALPHA) -> NbModel:
    """Train a multinomial Naive Bayes model on labeled messages.

    Args:
        corpus: Training transcripts; every message is one training unit
        alpha: Additive smoothing, > 0

    Returns:
        Trained NbModel

    Raises:
        ConfigError: If alpha <= 0
        EmptyTrainingSet: If the corpus holds no labeled message
    """
    if not alpha > 0:
        raise ConfigError(f"alpha must be > 0, got {alpha}")

    messages = labeled_messages(corpus)
    vocabulary = build_vocabulary(m.text for m in messages)

    token_counts = np.zeros((2, len(vocabulary)), dtype=np.int64)
    doc_counts = np.zeros(2, dtype=np.int64)
    for message in messages:
        row = ADULT if message.gold_role is Role.ADULT else CHILD
        indices, counts = featurize(message.text, vocabulary)
        token_counts[row, indices] += counts.astype(np.int64)
        doc_counts[row] += 1

    logger.info(
        f"Trained NB on {len(messages)} messages "
        f"({doc_counts[ADULT]} adult, {doc_counts[CHILD]} child, {len(vocabulary)} tokens)"
    )
    return NbModel(
        vocabulary=vocabulary,
        class_token_counts=token_counts,
        class_doc_counts=doc_counts,
        alpha=float(alpha),
    )


def nb_decision(
    log_prior: np.ndarray,
    feature_log_prob: np.ndarray,
    indices: np.ndarray,
    counts: np.ndarray
) -> float:
    """Adult-minus-Child joint log likelihood of one count vector."""
    joint = log_prior + feature_log_prob[:, indices] @ counts
    # Both classes -inf cannot happen: at least one class has messages
    return float(joint[ADULT] - joint[CHILD])


def score_nb(
    model: NbModel,
    message: Message,
    cached: Optional[Tuple[np.ndarray, np.ndarray]] = None
) -> MessageScore:
    """Posterior probability that a message is Adult.

    Args:
        model: Trained model
        message: Message to score
        cached: Optional precomputed (class_log_prior, feature_log_prob)

    Returns:
        MessageScore with value P(Adult | tokens)
    """
    log_prior, feature_log_prob = cached or (model.class_log_prior(), model.feature_log_prob())
    indices, counts = featurize(message.text, model.vocabulary)
    value = float(expit(nb_decision(log_prior, feature_log_prob, indices, counts)))
    return MessageScore(value=value, scorer_id=SCORER_NB)
