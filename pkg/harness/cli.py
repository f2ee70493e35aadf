"""Command-line interface: argument parsing and subcommand dispatch.

Exit codes: 0 on success, 1 on configuration errors, 2 on data errors.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional

from config import (
    DEFAULT_ALPHA, DEFAULT_AST, DEFAULT_AST_GRID, DEFAULT_EPOCHS, DEFAULT_LEARNING_RATE,
    DEFAULT_SEED, DEFAULT_SPLIT_FRACTION, DEFAULT_T, DEFAULT_T_GRID, EXIT_CONFIG_ERROR,
    EXIT_DATA_ERROR, EXIT_OK, EXTENDED_AST_GRID, EXTENDED_T_GRID, INGEST_FORMATS,
    MIN_MESSAGES_CORPUS, MIN_MESSAGES_MLA, PROJECT_NAME, SCORER_HINGE,
    SCORER_KINDS, SCORER_LOGISTIC, SCORER_NB, SYNTH_NOISE_RATE, VERSION,
)
from data.corpus_filters import filter_transcripts
from data.corpus_store import CorpusStore
from data.model_store import load_model, save_model
from data.pan12_parser import load_pan12_file
from data.pj_parser import ingest_pj_directory
from data.synthetic import generate_synthetic_corpus
from errors import ConfigError, DataError
from harness.experiments import run_crossset, run_interset, run_sweep
from harness.pdf_report import PdfReport
from harness.report_writer import write_report
from logic.context_engine import ContextEngine
from logic.message_analysis import evaluate_mla
from logic.metrics import MetricsCalculator
from logic.scorers import ExternalScorer, Scorer, scorer_for_model, train_model
from logic.validator import Validator
from models import AttackerRegistry, ConfusionCounts, ExperimentConfig, OgLabel, Thresholds, Transcript
from models.experiment import DeterminationRecord

logger = logging.getLogger(__name__)

PJ_PAGE_PATTERNS = ("*.htm", "*.html")


class CliParser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors as ConfigError."""

    def error(self, message: str) -> None:
        raise ConfigError(message)


# ============================================================================
# Argument helpers
# ============================================================================

def _float_list(text: str) -> List[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from e


def _add_threshold_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--t", type=float, default=DEFAULT_T, help="Symmetric message threshold t")
    parser.add_argument("--t-adult", type=float, default=None, help="Upper band width (overrides --t)")
    parser.add_argument("--t-child", type=float, default=None, help="Lower band width (overrides --t)")


def _add_scorer_source(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--model", help="Model file written by 'train'")
    source.add_argument("--scores-file", help="External scores TSV")


def _add_experiment_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--corpus", required=True, help="Canonical JSONL corpus (training corpus for cross-set)")
    parser.add_argument("--eval-corpus", help="Evaluation corpus for cross-set runs")
    parser.add_argument("--scorer", choices=SCORER_KINDS, default=SCORER_NB)
    parser.add_argument("--scores-file", help="External scores TSV (scorer 'external')")
    parser.add_argument("--model-name", help="Label for the model column of reports")
    parser.add_argument("--alpha", type=float, default=DEFAULT_ALPHA)
    parser.add_argument("--epochs", type=int, default=DEFAULT_EPOCHS)
    parser.add_argument("--lr", type=float, default=DEFAULT_LEARNING_RATE)
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    parser.add_argument("--split", type=float, default=DEFAULT_SPLIT_FRACTION, help="Training share of the inter-set split")
    parser.add_argument("--t-grid", type=_float_list, default=None, help="Comma-separated t values")
    parser.add_argument("--ast-grid", type=_float_list, default=None, help="Comma-separated AST values")
    parser.add_argument("--extended", action="store_true", help="Default to the extended grids near t = 0.5")
    parser.add_argument("--t-adult", type=float, default=None, help="Fix the upper band width for every grid point")
    parser.add_argument("--t-child", type=float, default=None, help="Fix the lower band width for every grid point")
    parser.add_argument("--two-tailed", action="store_true", help="Use two-tailed p-values")
    parser.add_argument("--exclude-overlap", action="store_true", help="Drop training transcripts also found in the eval corpus")
    parser.add_argument("--min-messages", type=int, default=MIN_MESSAGES_CORPUS)
    parser.add_argument("--min-messages-mla", type=int, default=MIN_MESSAGES_MLA)
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--out", required=True, help="Output directory")
    parser.add_argument("--pdf", action="store_true", help="Also write a PDF summary")


def build_parser() -> CliParser:
    """Create the argument parser with all subcommands."""
    parser = CliParser(prog="ac-context", description=f"{PROJECT_NAME} {VERSION}")
    parser.add_argument("--verbose", action="store_true", help="Log at DEBUG level")
    parser.add_argument("--log-file", help="Also write the log to this file")
    commands = parser.add_subparsers(dest="command", required=True)

    ingest = commands.add_parser("ingest", help="Parse a raw corpus into canonical JSONL")
    ingest.add_argument("inputs", nargs="+", help="Files or directories")
    ingest.add_argument("--format", choices=sorted(INGEST_FORMATS), required=True)
    ingest.add_argument("--attackers", help="Known-attackers file (pj)")
    ingest.add_argument("--predators", help="Predator-ids file (pan12)")
    ingest.add_argument("--min-messages", type=int, default=MIN_MESSAGES_CORPUS)
    ingest.add_argument("--workers", type=int, default=1)
    ingest.add_argument("--out", required=True)

    train = commands.add_parser("train", help="Train a native scorer")
    train.add_argument("--corpus", required=True)
    train.add_argument("--scorer", choices=(SCORER_NB, SCORER_HINGE, SCORER_LOGISTIC), default=SCORER_NB)
    train.add_argument("--alpha", type=float, default=DEFAULT_ALPHA)
    train.add_argument("--epochs", type=int, default=DEFAULT_EPOCHS)
    train.add_argument("--lr", type=float, default=DEFAULT_LEARNING_RATE)
    train.add_argument("--seed", type=int, default=DEFAULT_SEED)
    train.add_argument("--model-out", required=True)

    mla = commands.add_parser("mla", help="Message-level analysis of a labeled corpus")
    mla.add_argument("--corpus", required=True)
    _add_scorer_source(mla)
    _add_threshold_args(mla)
    mla.add_argument("--min-messages", type=int, default=0)

    context = commands.add_parser("context", help="Determine transcript contexts")
    context.add_argument("--corpus", required=True)
    _add_scorer_source(context)
    _add_threshold_args(context)
    context.add_argument("--ast", type=float, default=DEFAULT_AST)
    context.add_argument("--two-tailed", action="store_true")
    context.add_argument("--min-messages", type=int, default=MIN_MESSAGES_CORPUS)
    context.add_argument("--out", help="Write per-transcript determinations (JSONL)")

    sweep = commands.add_parser("sweep", help="Evaluate a t x AST grid")
    _add_experiment_args(sweep)

    report = commands.add_parser("report", help="Run an experiment and write its reports")
    _add_experiment_args(report)
    report.add_argument("--mode", choices=("interset", "crossset"), default="interset")

    entry = commands.add_parser("attacker-entry", help="Add a username to the known-attackers file")
    entry.add_argument("name")
    entry.add_argument("--attackers", required=True)

    synth = commands.add_parser("synth", help="Generate a synthetic corpus")
    synth.add_argument("--out", required=True)
    synth.add_argument("--n", type=int, default=200)
    synth.add_argument("--seed", type=int, default=DEFAULT_SEED)
    synth.add_argument("--noise", type=float, default=SYNTH_NOISE_RATE)
    synth.add_argument("--negative-fraction", type=float, default=0.0)

    return parser


def _thresholds(args: argparse.Namespace, ast: float = DEFAULT_AST, two_tailed: bool = False) -> Thresholds:
    thresholds = Thresholds(
        t_adult=args.t_adult if args.t_adult is not None else args.t,
        t_child=args.t_child if args.t_child is not None else args.t,
        ast=ast,
        two_tailed=two_tailed,
    )
    Validator.require_valid_thresholds(thresholds)
    return thresholds


def _scorer(args: argparse.Namespace) -> Scorer:
    if args.scores_file:
        return ExternalScorer.from_file(args.scores_file)
    return scorer_for_model(load_model(args.model))


def _experiment_config(args: argparse.Namespace) -> ExperimentConfig:
    return ExperimentConfig(
        scorer=args.scorer,
        scores_path=args.scores_file,
        split_fraction=args.split,
        seed=args.seed,
        t_grid=args.t_grid if args.t_grid is not None else list(EXTENDED_T_GRID if args.extended else DEFAULT_T_GRID),
        ast_grid=args.ast_grid if args.ast_grid is not None else list(EXTENDED_AST_GRID if args.extended else DEFAULT_AST_GRID),
        min_messages_corpus=args.min_messages,
        min_messages_mla=args.min_messages_mla,
        alpha=args.alpha,
        epochs=args.epochs,
        learning_rate=args.lr,
        two_tailed=args.two_tailed,
        exclude_overlap=args.exclude_overlap,
        model_name=args.model_name,
        t_adult=args.t_adult,
        t_child=args.t_child,
        workers=args.workers,
    )


def _pj_pages(inputs: List[str]) -> List[Path]:
    pages: List[Path] = []
    for item in inputs:
        path = Path(item)
        if path.is_dir():
            found = {p for pattern in PJ_PAGE_PATTERNS for p in path.glob(pattern)}
            pages.extend(sorted(found))
        else:
            pages.append(path)
    return pages


# ============================================================================
# Subcommands
# ============================================================================

def cmd_ingest(args: argparse.Namespace) -> int:
    if args.format == "pj":
        registry = (CorpusStore.load_attacker_registry(args.attackers)
                    if args.attackers else AttackerRegistry())
        result = ingest_pj_directory(_pj_pages(args.inputs), registry, args.workers)
        corpus = result.transcripts
        for pending in result.attacker_entry_needed:
            print(f"attacker entry needed: {pending.page_name} (senders: {', '.join(pending.senders)})")
        for page in result.excluded_email:
            print(f"e-mail transcript excluded: {page}")
    elif args.format == "pan12":
        if not args.predators:
            raise ConfigError("--predators is required for --format pan12")
        predator_ids = CorpusStore.load_predator_ids(args.predators)
        corpus = [t for path in args.inputs for t in load_pan12_file(path, predator_ids)]
    else:
        corpus = [t for path in args.inputs for t in CorpusStore.read_canonical(path)]

    kept = filter_transcripts(corpus, args.min_messages)
    CorpusStore.write_canonical(kept, args.out)
    flagged = sum(1 for t in kept if t.needs_manual_review)
    print(f"wrote {len(kept)} transcripts to {args.out} ({flagged} flagged for manual review)")
    return EXIT_OK


def cmd_train(args: argparse.Namespace) -> int:
    corpus = CorpusStore.read_canonical(args.corpus)
    config = ExperimentConfig(
        scorer=args.scorer, alpha=args.alpha, epochs=args.epochs,
        learning_rate=args.lr, seed=args.seed,
    )
    model = train_model(config, corpus)
    save_model(model, args.model_out)
    print(f"saved {args.scorer} model ({len(model.vocabulary)} tokens) to {args.model_out}")
    return EXIT_OK


def cmd_mla(args: argparse.Namespace) -> int:
    thresholds = _thresholds(args)
    corpus = [
        t for t in filter_transcripts(CorpusStore.read_canonical(args.corpus), args.min_messages)
        if t.og_label is OgLabel.POSITIVE
    ]
    scorer = _scorer(args)
    pairs = []
    for transcript in corpus:
        scores = scorer.score_transcript(transcript)
        pairs.extend((m, scores[m.ordinal]) for m in transcript.messages)
    counts = evaluate_mla(pairs, thresholds)

    print(f"TP={counts.tp} IA={counts.ia} IC={counts.ic} O={counts.o} total={counts.total}")
    tp_pct, ia_pct, ic_pct, o_pct = MetricsCalculator.mla_percentages(counts)
    print(f"TP%={tp_pct:.2f} IA%={ia_pct:.2f} IC%={ic_pct:.2f} O%={o_pct:.2f}")
    return EXIT_OK


def cmd_context(args: argparse.Namespace) -> int:
    thresholds = _thresholds(args, args.ast, args.two_tailed)
    corpus = filter_transcripts(
        CorpusStore.read_canonical(args.corpus), args.min_messages, require_two_actors=True
    )
    scorer = _scorer(args)

    counts = ConfusionCounts()
    unlabeled = 0
    records: List[DeterminationRecord] = []
    for transcript in corpus:
        context, determinations = ContextEngine.run_context(
            transcript, scorer.score_transcript(transcript), thresholds
        )
        records.append(DeterminationRecord(
            transcript.id, thresholds.t_adult, thresholds.t_child, thresholds.ast, context, determinations
        ))
        if transcript.og_label is OgLabel.UNKNOWN:
            unlabeled += 1
            continue
        counts.add(MetricsCalculator.score_transcript_prediction(context, transcript.og_label))

    if args.out:
        _write_determinations(records, args.out)
    if unlabeled:
        logger.warning(f"{unlabeled} transcripts without positive/negative label left out of the counts")
    print(f"TP={counts.tp} FP={counts.fp} TN={counts.tn} FN={counts.fn} "
          f"F1={MetricsCalculator.f_beta(counts):.3f}")
    return EXIT_OK


def _write_determinations(records: List[DeterminationRecord], path: str) -> None:
    file_path = Path(path)
    file_path.parent.mkdir(parents=True, exist_ok=True)
    with open(file_path, "w", encoding="utf-8") as f:
        for record in records:
            f.write(json.dumps(record.to_dict(), sort_keys=True))
            f.write("\n")
    logger.info(f"Wrote {len(records)} determinations to {file_path}")


def _load_experiment_corpora(args: argparse.Namespace):
    corpus = CorpusStore.read_canonical(args.corpus)
    eval_corpus: Optional[List[Transcript]] = None
    if args.eval_corpus:
        eval_corpus = CorpusStore.read_canonical(args.eval_corpus)
    return corpus, eval_corpus


def _print_rows(report) -> None:
    for row in report.context_rows:
        marker = " *" if row.best else ""
        c = row.counts
        print(f"t=({row.t_adult:g},{row.t_child:g}) ast={row.ast:g} "
              f"TP={c.tp} FP={c.fp} TN={c.tn} FN={c.fn} F1={row.f1:.3f}{marker}")


def _check_pdf(args: argparse.Namespace) -> None:
    if args.pdf and not PdfReport.is_available():
        raise ConfigError("--pdf needs reportlab (pip install reportlab)")


def cmd_sweep(args: argparse.Namespace) -> int:
    _check_pdf(args)
    corpus, eval_corpus = _load_experiment_corpora(args)
    report = run_sweep(_experiment_config(args), corpus, eval_corpus)
    write_report(report, args.out, pdf=args.pdf)
    _print_rows(report)
    return EXIT_OK


def cmd_report(args: argparse.Namespace) -> int:
    _check_pdf(args)
    corpus, eval_corpus = _load_experiment_corpora(args)
    config = _experiment_config(args)
    if args.mode == "crossset":
        if eval_corpus is None:
            raise ConfigError("--mode crossset needs --eval-corpus")
        report = run_crossset(config, corpus, eval_corpus)
    else:
        report = run_interset(config, corpus)
    write_report(report, args.out, pdf=args.pdf)
    _print_rows(report)
    return EXIT_OK


def cmd_attacker_entry(args: argparse.Namespace) -> int:
    registry = CorpusStore.attacker_entry(args.attackers, args.name)
    print(f"{len(registry)} known attackers in {args.attackers}")
    return EXIT_OK


def cmd_synth(args: argparse.Namespace) -> int:
    try:
        corpus = generate_synthetic_corpus(
            n_transcripts=args.n, seed=args.seed, noise=args.noise,
            negative_fraction=args.negative_fraction,
        )
    except ValueError as e:
        raise ConfigError(str(e)) from e
    CorpusStore.write_canonical(corpus, args.out)
    print(f"wrote {len(corpus)} synthetic transcripts to {args.out}")
    return EXIT_OK


COMMANDS: Dict[str, Callable[[argparse.Namespace], int]] = {
    "ingest": cmd_ingest,
    "train": cmd_train,
    "mla": cmd_mla,
    "context": cmd_context,
    "sweep": cmd_sweep,
    "report": cmd_report,
    "attacker-entry": cmd_attacker_entry,
    "synth": cmd_synth,
}


def dispatch(args: argparse.Namespace) -> int:
    """Run a parsed command and map errors to exit codes."""
    try:
        return COMMANDS[args.command](args)
    except ConfigError as e:
        logger.error(f"Configuration error: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONFIG_ERROR
    except (DataError, OSError) as e:
        logger.error(f"Data error: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DATA_ERROR
