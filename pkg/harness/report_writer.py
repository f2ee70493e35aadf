"""CSV, JSONL and manifest output of experiment reports."""

import csv
import json
import logging
import platform
from pathlib import Path
from typing import List

import numpy as np
import scipy

from config import (
    CONTEXT_REPORT_COLUMNS, CONTEXT_REPORT_FILE, DETERMINATIONS_FILE, FLOAT_PRECISION,
    MANIFEST_FILE, MLA_REPORT_COLUMNS, MLA_REPORT_FILE, PDF_REPORT_FILE, PROJECT_NAME,
    SWEEP_REPORT_FILE, VERSION,
)
from errors import EmptyEvaluation
from logic.metrics import MetricsCalculator
from models import ExperimentReport

logger = logging.getLogger(__name__)


def _fmt(value: float) -> str:
    return f"{value:.{FLOAT_PRECISION}f}"


def context_csv_rows(report: ExperimentReport) -> List[List[str]]:
    """Context report rows (header first) in the fixed column order."""
    config = report.config
    rows = [list(CONTEXT_REPORT_COLUMNS)]
    for row in report.context_rows:
        counts = row.counts
        rows.append([
            config.label, config.scorer,
            _fmt(row.t_adult), _fmt(row.t_child), _fmt(row.ast),
            str(counts.tp), str(counts.fp), str(counts.tn), str(counts.fn),
            _fmt(row.f1), _fmt(row.o_pct),
        ])
    return rows


def mla_csv_rows(report: ExperimentReport) -> List[List[str]]:
    """MLA report rows (header first); percentages stay empty when undefined."""
    config = report.config
    rows = [list(MLA_REPORT_COLUMNS)]
    for row in report.mla_rows:
        counts = row.counts
        try:
            percentages = [_fmt(p) for p in MetricsCalculator.mla_percentages(counts)]
        except EmptyEvaluation:
            percentages = ["", "", "", _fmt(MetricsCalculator.omitted_pct(counts)) if counts.total else ""]
        rows.append([
            config.label, config.scorer, _fmt(row.t_adult), _fmt(row.t_child),
            str(counts.tp), str(counts.ia), str(counts.ic), str(counts.o), str(counts.total),
            *percentages,
        ])
    return rows


def _write_csv(rows: List[List[str]], path: Path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerows(rows)


def build_manifest(report: ExperimentReport, outputs: List[str]) -> dict:
    """Reproducibility manifest: configuration echo, corpus digests, versions."""
    best = report.best_row()
    return {
        "project": PROJECT_NAME,
        "kind": report.kind,
        "config": report.config.to_dict(),
        "seed": report.config.seed,
        "corpus_digests": dict(report.corpus_digests),
        "transcripts_evaluated": report.transcripts_evaluated,
        "adult_share": report.adult_share,
        "best": None if best is None else {
            "t_adult": best.t_adult,
            "t_child": best.t_child,
            "ast": best.ast,
            "f1": best.f1,
            **best.counts.to_dict(),
        },
        "outputs": sorted(outputs),
        "versions": {
            "package": VERSION,
            "python": platform.python_version(),
            "numpy": np.__version__,
            "scipy": scipy.__version__,
        },
    }


def write_report(report: ExperimentReport, out_dir: str, pdf: bool = False) -> List[Path]:
    """Write every output file of a report.

    Files: the context (or sweep) CSV, the MLA CSV, per-transcript
    determinations, the manifest and optionally a PDF summary. The output
    directory is created if missing.

    Args:
        report: Finished experiment report
        out_dir: Output directory
        pdf: Also render report.pdf

    Returns:
        Paths of the written files

    Raises:
        OSError: If a file cannot be written
    """
    directory = Path(out_dir)
    try:
        directory.mkdir(parents=True, exist_ok=True)
        written = []

        context_path = directory / (SWEEP_REPORT_FILE if report.kind == "sweep" else CONTEXT_REPORT_FILE)
        _write_csv(context_csv_rows(report), context_path)
        written.append(context_path)

        mla_path = directory / MLA_REPORT_FILE
        _write_csv(mla_csv_rows(report), mla_path)
        written.append(mla_path)

        # Thresholds are repeated per record once a file holds several grid points
        include_thresholds = len(report.context_rows) > 1
        determinations_path = directory / DETERMINATIONS_FILE
        with open(determinations_path, "w", encoding="utf-8") as f:
            for record in report.determinations:
                f.write(json.dumps(record.to_dict(include_thresholds), sort_keys=True))
                f.write("\n")
        written.append(determinations_path)

        if pdf:
            from harness.pdf_report import PdfReport
            pdf_path = directory / PDF_REPORT_FILE
            PdfReport.save_pdf_to_file(PdfReport.render_pdf(report), str(pdf_path))
            written.append(pdf_path)

        manifest_path = directory / MANIFEST_FILE
        manifest = build_manifest(report, [p.name for p in written] + [MANIFEST_FILE])
        with open(manifest_path, "w", encoding="utf-8") as f:
            json.dump(manifest, f, indent=2, sort_keys=True)
            f.write("\n")
        written.append(manifest_path)

        logger.info(f"Wrote {len(written)} report files to {directory}")
        return written

    except Exception as e:
        logger.error(f"Error writing report: {e}")
        raise
