"""Experiment orchestration: runners, report writers and the CLI."""

from .experiments import exclude_overlap, run_crossset, run_interset, run_sweep, split_corpus
from .report_writer import write_report

__all__ = ["exclude_overlap", "run_crossset", "run_interset", "run_sweep", "split_corpus", "write_report"]
