"""Transcript-level confusion accounting, F-beta and MLA percentages."""

from typing import Tuple

from config import DEFAULT_BETA
from errors import ConfigError, DivisionByZeroReference, EmptyEvaluation, UnknownLabel
from models import ConfusionCounts, MlaCounts, OgLabel, Outcome, TranscriptContext


class MetricsCalculator:
    """Metric computations over confusion and MLA tallies."""

    @staticmethod
    def score_transcript_prediction(context: TranscriptContext, og_label: OgLabel) -> Outcome:
        """Map a determined context and the gold transcript label to an outcome.

        Only AC is a positive prediction; AA, CC and NS count as negative.

        Raises:
            UnknownLabel: If the transcript has no Positive/Negative label
        """
        if og_label is OgLabel.UNKNOWN:
            raise UnknownLabel("Transcript has no positive/negative label")

        predicted_positive = context is TranscriptContext.AC
        if og_label is OgLabel.POSITIVE:
            return Outcome.TP if predicted_positive else Outcome.FN
        return Outcome.FP if predicted_positive else Outcome.TN

    @staticmethod
    def f_beta(counts: ConfusionCounts, beta: float = DEFAULT_BETA) -> float:
        """F-beta score; 0.0 when the denominator is zero.

        Raises:
            ConfigError: If beta <= 0
        """
        if not beta > 0:
            raise ConfigError(f"beta must be > 0, got {beta}")
        weight = 1.0 + beta * beta
        denominator = weight * counts.tp + beta * beta * counts.fn + counts.fp
        if denominator == 0:
            return 0.0
        return weight * counts.tp / denominator

    @staticmethod
    def rate_change(a: ConfusionCounts, b: ConfusionCounts) -> Tuple[float, float]:
        """Percentage change of FN and FP counts from reference b to a.

        Args:
            a: Counts after the change
            b: Reference counts

        Returns:
            Tuple of (fn_pct_change, fp_pct_change)

        Raises:
            DivisionByZeroReference: If a reference count is zero while the
                compared count differs from it
        """
        return (
            MetricsCalculator._pct_change(a.fn, b.fn, "FN"),
            MetricsCalculator._pct_change(a.fp, b.fp, "FP"),
        )

    @staticmethod
    def _pct_change(new: int, reference: int, name: str) -> float:
        if reference == 0:
            if new == 0:
                return 0.0
            raise DivisionByZeroReference(f"Reference {name} count is zero")
        return 100.0 * (new - reference) / reference

    @staticmethod
    def mla_percentages(counts: MlaCounts) -> Tuple[float, float, float, float]:
        """Percentages of an MLA tally.

        TP, IA and IC are taken over included (non-omitted) messages; O is
        taken over all messages.

        Returns:
            Tuple of (tp_pct, ia_pct, ic_pct, o_pct)

        Raises:
            EmptyEvaluation: If no message was evaluated or all were omitted
        """
        if counts.total <= 0:
            raise EmptyEvaluation("No messages were evaluated")
        included = counts.included
        if included <= 0:
            raise EmptyEvaluation("All messages were omitted")
        return (
            100.0 * counts.tp / included,
            100.0 * counts.ia / included,
            100.0 * counts.ic / included,
            100.0 * counts.o / counts.total,
        )

    @staticmethod
    def omitted_pct(counts: MlaCounts) -> float:
        """O percentage alone; 0.0 for an empty tally."""
        return 100.0 * counts.o / counts.total if counts.total else 0.0
