"""
Experiment runners for inter-set, cross-set and sweep evaluation.

Each run scores every evaluated transcript once and reuses those scores for
all threshold pairs and AST values of its grid.
"""

import dataclasses
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from data.corpus_filters import filter_transcripts
from data.corpus_store import CorpusStore
from errors import ConfigError, EmptyCorpus
from logic.context_engine import ContextEngine
from logic.message_analysis import evaluate_mla
from logic.metrics import MetricsCalculator
from logic.scorers import Scorer, build_scorer
from logic.validator import Validator
from models import (
    ConfusionCounts, ExperimentConfig, ExperimentReport, MessageScore, MlaCounts,
    OgLabel, Role, Thresholds, Transcript,
)
from models.experiment import ContextRow, DeterminationRecord, MlaRow

logger = logging.getLogger(__name__)

TranscriptScores = Dict[int, MessageScore]
ThresholdPair = Tuple[float, float]


def split_corpus(
    corpus: List[Transcript],
    fraction: float,
    seed: int
) -> Tuple[List[Transcript], List[Transcript]]:
    """Split a corpus into train and test sets at transcript granularity.

    Transcripts are ordered by id, then shuffled with a seeded generator, so
    the split does not depend on input order.

    Args:
        corpus: Transcripts to split
        fraction: Training share, in (0, 1)
        seed: Shuffle seed

    Returns:
        Tuple of (train, test), disjoint and together the whole corpus

    Raises:
        ConfigError: If fraction is outside (0, 1)
        EmptyCorpus: If the corpus is empty
    """
    if not 0.0 < fraction < 1.0:
        raise ConfigError(f"split fraction must be in (0, 1), got {fraction}")
    if not corpus:
        raise EmptyCorpus("Cannot split an empty corpus")

    ordered = sorted(corpus, key=lambda t: t.id)
    permutation = np.random.default_rng(seed).permutation(len(ordered))
    n_train = int(round(len(ordered) * fraction))
    train = [ordered[i] for i in permutation[:n_train]]
    test = [ordered[i] for i in permutation[n_train:]]
    logger.info(f"Split {len(ordered)} transcripts into {len(train)} train / {len(test)} test (seed {seed})")
    return train, test


def exclude_overlap(train: List[Transcript], evaluation: List[Transcript]) -> List[Transcript]:
    """Drop training transcripts whose content digest occurs in the evaluation corpus."""
    eval_digests = {CorpusStore.transcript_digest(t) for t in evaluation}
    kept = [t for t in train if CorpusStore.transcript_digest(t) not in eval_digests]
    logger.info(f"Overlap exclusion removed {len(train) - len(kept)} of {len(train)} training transcripts")
    return kept


def threshold_pairs(config: ExperimentConfig) -> List[ThresholdPair]:
    """(t_adult, t_child) pairs of a run.

    Each grid value is used on both sides unless t_adult or t_child is
    fixed by the configuration.
    """
    pairs = [
        (config.t_adult if config.t_adult is not None else t,
         config.t_child if config.t_child is not None else t)
        for t in config.t_grid
    ]
    return list(dict.fromkeys(pairs))


def prepare_config(config: ExperimentConfig) -> ExperimentConfig:
    """Deduplicate the grids and validate a configuration.

    Raises:
        ConfigError: If any setting is invalid
    """
    prepared = dataclasses.replace(
        config,
        t_grid=Validator.dedupe_grid(config.t_grid, "t_grid"),
        ast_grid=Validator.dedupe_grid(config.ast_grid, "ast_grid"),
    )
    Validator.require_valid_config(prepared)
    return prepared


def score_transcripts(scorer: Scorer, transcripts: Sequence[Transcript], workers: int = 1) -> List[TranscriptScores]:
    """Score transcripts, optionally in a process pool; output follows input order."""
    if workers > 1 and len(transcripts) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(scorer.score_transcript, transcripts, chunksize=16))
    return [scorer.score_transcript(t) for t in transcripts]


def _mla_rows(
    transcripts: Sequence[Transcript],
    scores: Sequence[TranscriptScores],
    pairs: Sequence[ThresholdPair]
) -> List[MlaRow]:
    rows = []
    for t_adult, t_child in pairs:
        thresholds = Thresholds(t_adult=t_adult, t_child=t_child)
        counts = MlaCounts()
        for transcript, transcript_scores in zip(transcripts, scores):
            counts = counts.merge(evaluate_mla(
                ((m, transcript_scores[m.ordinal]) for m in transcript.messages), thresholds
            ))
        rows.append(MlaRow(t_adult=t_adult, t_child=t_child, counts=counts))
    return rows


def _context_rows(
    transcripts: Sequence[Transcript],
    scores: Sequence[TranscriptScores],
    pairs: Sequence[ThresholdPair],
    config: ExperimentConfig
) -> Tuple[List[ContextRow], List[DeterminationRecord]]:
    rows = []
    records = []
    total_messages = sum(len(t.messages) for t in transcripts)

    for t_adult, t_child in pairs:
        band = Thresholds(t_adult=t_adult, t_child=t_child, two_tailed=config.two_tailed)

        # Omission and classification do not depend on the AST
        per_transcript = []
        omitted = 0
        for transcript, transcript_scores in zip(transcripts, scores):
            actors = []
            for actor_id, messages in transcript.messages_by_actor().items():
                actor_scores = [transcript_scores[m.ordinal] for m in messages]
                labels = ContextEngine.included_labels(actor_scores, band)
                omitted += len(actor_scores) - len(labels)
                actors.append((actor_id, labels))
            per_transcript.append(actors)
        o_pct = 100.0 * omitted / total_messages if total_messages else 0.0

        for ast in config.ast_grid:
            counts = ConfusionCounts()
            for transcript, actors in zip(transcripts, per_transcript):
                determinations = [
                    ContextEngine.determine_actor(actor_id, labels, ast, config.two_tailed)
                    for actor_id, labels in actors
                ]
                context = ContextEngine.determine_context(determinations[0], determinations[1])
                if transcript.og_label is not OgLabel.UNKNOWN:
                    counts.add(MetricsCalculator.score_transcript_prediction(context, transcript.og_label))
                records.append(DeterminationRecord(
                    transcript_id=transcript.id,
                    t_adult=t_adult,
                    t_child=t_child,
                    ast=ast,
                    context=context,
                    actors=determinations,
                ))
            rows.append(ContextRow(
                t_adult=t_adult,
                t_child=t_child,
                ast=ast,
                counts=counts,
                f1=MetricsCalculator.f_beta(counts, 1.0),
                o_pct=o_pct,
            ))

    mark_best_row(rows)
    return rows, records


def mark_best_row(rows: List[ContextRow]) -> Optional[ContextRow]:
    """Mark the row with the highest F1; ties go to the lower ast, then the lower t."""
    if not rows:
        return None
    best = min(rows, key=lambda r: (-r.f1, r.ast, r.t_adult, r.t_child))
    for row in rows:
        row.best = row is best
    return best


def _adult_share(transcripts: Sequence[Transcript]) -> Optional[float]:
    total = sum(len(t.messages) for t in transcripts)
    if total == 0:
        return None
    adult = sum(t.role_counts()[Role.ADULT] for t in transcripts)
    return adult / total


def _context_eligible(transcripts: Sequence[Transcript], min_messages: int) -> List[Transcript]:
    eligible = filter_transcripts(transcripts, min_messages, require_two_actors=True)
    skipped = len(transcripts) - len(eligible)
    if skipped:
        logger.info(f"{skipped} transcripts are not eligible for context determination")
    return eligible


def _evaluate(
    kind: str,
    config: ExperimentConfig,
    scorer: Scorer,
    mla_set: List[Transcript],
    context_set: List[Transcript],
    corpus_digests: Dict[str, str]
) -> ExperimentReport:
    # Score the union of both sets once, in a stable order
    union: Dict[int, Transcript] = {}
    for transcript in mla_set + context_set:
        union.setdefault(id(transcript), transcript)
    ordered = list(union.values())
    scored = dict(zip(union.keys(), score_transcripts(scorer, ordered, config.workers)))

    unlabeled = sum(1 for t in context_set if t.og_label is OgLabel.UNKNOWN)
    if unlabeled:
        logger.warning(f"{unlabeled} transcripts without positive/negative label left out of the counts")

    pairs = threshold_pairs(config)
    mla_rows = _mla_rows(mla_set, [scored[id(t)] for t in mla_set], pairs)
    context_rows, records = _context_rows(context_set, [scored[id(t)] for t in context_set], pairs, config)

    report = ExperimentReport(
        kind=kind,
        config=config,
        mla_rows=mla_rows,
        context_rows=context_rows,
        determinations=records,
        adult_share=_adult_share(mla_set),
        transcripts_evaluated=len(context_set),
        corpus_digests=corpus_digests,
    )
    best = report.best_row()
    if best is not None:
        logger.info(
            f"{kind} run finished: {len(context_rows)} context rows, best F1 {best.f1:.3f} "
            f"at t=({best.t_adult}, {best.t_child}), ast={best.ast}"
        )
    return report


def run_interset(config: ExperimentConfig, corpus: List[Transcript], kind: str = "interset") -> ExperimentReport:
    """Train and evaluate on a seeded split of one corpus.

    MLA runs over the positive test transcripts; context determination runs
    over every peer-to-peer test transcript.

    Args:
        config: Experiment settings
        corpus: Labeled corpus
        kind: Report kind written to the manifest

    Returns:
        ExperimentReport with MLA rows per threshold pair and context rows
        per threshold pair and AST

    Raises:
        ConfigError: If the configuration is invalid
        EmptyCorpus: If no transcript survives the length filter
    """
    config = prepare_config(config)
    admitted = filter_transcripts(corpus, config.min_messages_corpus)
    train, test = split_corpus(admitted, config.split_fraction, config.seed)
    scorer = build_scorer(config, train)

    mla_set = [t for t in test if t.og_label is OgLabel.POSITIVE]
    context_set = _context_eligible(test, config.min_messages_corpus)
    digests = {"corpus": CorpusStore.corpus_digest(corpus)}
    return _evaluate(kind, config, scorer, mla_set, context_set, digests)


def run_crossset(
    config: ExperimentConfig,
    train_corpus: List[Transcript],
    eval_corpus: List[Transcript],
    kind: str = "crossset"
) -> ExperimentReport:
    """Train on one corpus and evaluate on another.

    MLA only uses positive evaluation transcripts with at least
    min_messages_mla messages, since roles in negative transcripts are
    unknown. Context determination covers every eligible evaluation
    transcript.

    Raises:
        ConfigError: If the configuration is invalid
        EmptyCorpus: If the evaluation corpus is empty
    """
    config = prepare_config(config)
    if not eval_corpus:
        raise EmptyCorpus("Evaluation corpus is empty")
    if config.exclude_overlap:
        train_corpus = exclude_overlap(train_corpus, eval_corpus)
    scorer = build_scorer(config, train_corpus)

    mla_set = [
        t for t in filter_transcripts(eval_corpus, config.min_messages_mla)
        if t.og_label is OgLabel.POSITIVE
    ]
    context_set = _context_eligible(eval_corpus, config.min_messages_corpus)
    digests = {
        "train": CorpusStore.corpus_digest(train_corpus),
        "eval": CorpusStore.corpus_digest(eval_corpus),
    }
    return _evaluate(kind, config, scorer, mla_set, context_set, digests)


def run_sweep(
    config: ExperimentConfig,
    corpus: List[Transcript],
    eval_corpus: Optional[List[Transcript]] = None
) -> ExperimentReport:
    """Evaluate every (t, ast) pair of the configured grids.

    With one corpus the sweep uses the inter-set split; with an evaluation
    corpus it runs cross-set. The report holds one context row per grid
    point, and the best row is marked.
    """
    if eval_corpus is None:
        return run_interset(config, corpus, kind="sweep")
    return run_crossset(config, corpus, eval_corpus, kind="sweep")
