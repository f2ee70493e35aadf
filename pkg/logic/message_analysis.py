"""Message-level analysis (MLA): per-message TP / IA / IC / O tallies."""

from typing import Iterable, Tuple

from errors import MissingGoldLabel
from logic.context_engine import ContextEngine, ScoreLike
from models import Message, MlaCounts, MlaOutcome, Role, Thresholds


def mla_outcome(message: Message, score: ScoreLike, thresholds: Thresholds) -> MlaOutcome:
    """Outcome of one scored message.

    Raises:
        MissingGoldLabel: If the message has no Adult/Child gold role
    """
    if not message.is_labeled():
        raise MissingGoldLabel(f"Message {message.ordinal} of {message.actor_id} has no gold role")
    if ContextEngine.is_omitted(score, thresholds):
        return MlaOutcome.O

    predicted = ContextEngine.classify_included(score, thresholds)
    if predicted is message.gold_role:
        return MlaOutcome.TP
    return MlaOutcome.IA if predicted is Role.ADULT else MlaOutcome.IC


def evaluate_mla(scored: Iterable[Tuple[Message, ScoreLike]], thresholds: Thresholds) -> MlaCounts:
    """Tally MLA outcomes over scored messages.

    Args:
        scored: (message, score) pairs; every message needs a gold role
        thresholds: Omission band

    Returns:
        MlaCounts with tp + ia + ic + o == total

    Raises:
        MissingGoldLabel: If a message has no Adult/Child gold role
    """
    counts = MlaCounts()
    for message, score in scored:
        counts.add(mla_outcome(message, score, thresholds))
    return counts
