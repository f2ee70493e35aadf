"""
Context determination engine.

This module implements the transcript-level decision of whether an Adult
and a Child are conversing:
- Message omission inside the threshold band around 0.5
- Adult/Child classification of the remaining messages
- Exact binomial significance test per actor against the AST
- XOR combination of the two actor labels into a transcript context
"""

import logging
from typing import List, Mapping, Sequence, Tuple, Union

from config import DECISION_MIDPOINT
from errors import MissingScore, NotPeerToPeer
from logic.significance import binomial_tail_p, binomial_two_tailed_p
from models import ActorDetermination, ActorLabel, MessageScore, Role, Thresholds, Transcript, TranscriptContext

logger = logging.getLogger(__name__)

ScoreLike = Union[MessageScore, float]


def _value(score: ScoreLike) -> float:
    return score.value if isinstance(score, MessageScore) else float(score)


class ContextEngine:
    """Core algorithm for transcript context determination."""

    @staticmethod
    def is_omitted(score: ScoreLike, thresholds: Thresholds) -> bool:
        """Check whether a message score falls inside the omission band.

        The band is open: (0.5 + t_adult) > score > (0.5 - t_child), so a
        score exactly on a bound is kept. A score of exactly 0.5 is always
        omitted; with zero widths it would satisfy both class conditions.

        Args:
            score: MessageScore or raw value in [0, 1]
            thresholds: Band widths

        Returns:
            True if the message is excluded from actor determination
        """
        value = _value(score)
        return value == DECISION_MIDPOINT or thresholds.upper_bound > value > thresholds.lower_bound

    @staticmethod
    def classify_included(score: ScoreLike, thresholds: Thresholds) -> Role:
        """Classify a non-omitted message as Adult or Child.

        Raises:
            ValueError: If the score is omitted under the thresholds
        """
        if ContextEngine.is_omitted(score, thresholds):
            raise ValueError(f"score {_value(score)} is omitted under {thresholds}")
        return Role.ADULT if _value(score) >= thresholds.upper_bound else Role.CHILD

    @staticmethod
    def included_labels(scores: Sequence[ScoreLike], thresholds: Thresholds) -> List[Role]:
        """Classify every non-omitted score, dropping omitted ones."""
        return [
            ContextEngine.classify_included(score, thresholds)
            for score in scores
            if not ContextEngine.is_omitted(score, thresholds)
        ]

    @staticmethod
    def determine_actor(
        actor_id: str,
        included_labels: Sequence[Role],
        ast: float,
        two_tailed: bool = False
    ) -> ActorDetermination:
        """Test whether an actor's included messages are significantly Adult or Child.

        Args:
            actor_id: Actor being determined
            included_labels: Adult/Child labels of the actor's included messages
            ast: Actor significance threshold; p <= ast is significant
            two_tailed: Use the two-tailed p-value

        Returns:
            ActorDetermination; no messages or an even split give NS with p = 1
        """
        n = len(included_labels)
        k = sum(1 for label in included_labels if label is Role.ADULT)

        if n == 0 or k == n - k:
            return ActorDetermination(actor_id, n, k, 1.0, ActorLabel.NS)

        majority = max(k, n - k)
        p_value = binomial_two_tailed_p(majority, n) if two_tailed else binomial_tail_p(majority, n)

        if p_value <= ast:
            label = ActorLabel.A if k > n - k else ActorLabel.C
        else:
            label = ActorLabel.NS
        return ActorDetermination(actor_id, n, k, p_value, label)

    @staticmethod
    def determine_context(a: ActorDetermination, b: ActorDetermination) -> TranscriptContext:
        """Combine two actor labels into the transcript context.

        AC requires exactly one Adult and exactly one Child actor.
        """
        if a.label is ActorLabel.NS or b.label is ActorLabel.NS:
            return TranscriptContext.NS

        a_adult, b_adult = a.label is ActorLabel.A, b.label is ActorLabel.A
        a_child, b_child = a.label is ActorLabel.C, b.label is ActorLabel.C
        if (a_adult != b_adult) and (a_child != b_child):
            return TranscriptContext.AC
        return TranscriptContext.AA if a_adult else TranscriptContext.CC

    @staticmethod
    def run_context(
        transcript: Transcript,
        scores: Mapping[int, ScoreLike],
        thresholds: Thresholds
    ) -> Tuple[TranscriptContext, List[ActorDetermination]]:
        """Determine the context of one peer-to-peer transcript.

        Every message carries the same weight regardless of its position.

        Args:
            transcript: Transcript with exactly two actors
            scores: Message ordinal -> score
            thresholds: Omission band and AST

        Returns:
            Tuple of (context, determinations in sorted actor order)

        Raises:
            NotPeerToPeer: If the transcript does not have exactly two actors
            MissingScore: If a message has no score
        """
        if not transcript.is_peer_to_peer:
            raise NotPeerToPeer(
                f"Transcript {transcript.id} has {len(transcript.actor_ids)} actors, expected 2"
            )

        missing = [m.ordinal for m in transcript.messages if m.ordinal not in scores]
        if missing:
            raise MissingScore(
                f"Transcript {transcript.id}: no score for ordinal(s) {missing[:5]}"
                + (" ..." if len(missing) > 5 else "")
            )

        determinations = []
        for actor_id, messages in transcript.messages_by_actor().items():
            labels = ContextEngine.included_labels([scores[m.ordinal] for m in messages], thresholds)
            determinations.append(
                ContextEngine.determine_actor(actor_id, labels, thresholds.ast, thresholds.two_tailed)
            )

        context = ContextEngine.determine_context(determinations[0], determinations[1])
        logger.debug(
            f"{transcript.id}: {context.value} "
            f"({', '.join(f'{d.actor_id}={d.label.value}' for d in determinations)})"
        )
        return context, determinations
