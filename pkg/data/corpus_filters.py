"""Corpus admission rules: label balance check and length/actor filters."""

import dataclasses
import logging
from typing import List

from config import LABEL_BALANCE_LIMIT
from errors import ConfigError
from models import Role, Transcript

logger = logging.getLogger(__name__)


def check_label_balance(transcript: Transcript, limit: float = LABEL_BALANCE_LIMIT) -> Transcript:
    """Flag a transcript whose labels are dominated by one role.

    Args:
        transcript: Transcript with gold roles assigned
        limit: Share a role must strictly exceed to trigger review

    Returns:
        Copy of the transcript with needs_manual_review set; nothing else changes
    """
    total = len(transcript.messages)
    counts = transcript.role_counts()
    flagged = total > 0 and any(
        counts[role] / total > limit for role in (Role.ADULT, Role.CHILD)
    )
    return dataclasses.replace(transcript, needs_manual_review=flagged)


def filter_transcripts(
    corpus: List[Transcript],
    min_messages: int,
    require_two_actors: bool = False
) -> List[Transcript]:
    """Keep transcripts that are long enough (and peer-to-peer if required).

    Args:
        corpus: Transcripts to filter
        min_messages: Minimum message count, inclusive
        require_two_actors: Also require exactly two actors

    Returns:
        Retained transcripts in input order

    Raises:
        ConfigError: If min_messages is negative
    """
    if min_messages < 0:
        raise ConfigError(f"min_messages must be >= 0, got {min_messages}")

    kept = [
        t for t in corpus
        if len(t.messages) >= min_messages and (not require_two_actors or t.is_peer_to_peer)
    ]
    if len(kept) != len(corpus):
        logger.info(f"Filtered corpus: kept {len(kept)} of {len(corpus)} transcripts")
    return kept
