"""Data access layer: corpus parsing, persistence and side files."""

from .corpus_filters import check_label_balance, filter_transcripts
from .corpus_store import CorpusStore
from .lock_manager import LockManager
from .model_store import load_model, save_model
from .pan12_parser import load_pan12_file, parse_pan12
from .pj_parser import IngestResult, ingest_pj_directory, is_email_transcript, parse_pj_page, strip_preamble
from .score_file import load_external_scores, write_scores
from .synthetic import generate_synthetic_corpus

__all__ = [
    "check_label_balance", "filter_transcripts",
    "CorpusStore",
    "LockManager",
    "load_model", "save_model",
    "load_pan12_file", "parse_pan12",
    "IngestResult", "ingest_pj_directory", "is_email_transcript", "parse_pj_page", "strip_preamble",
    "load_external_scores", "write_scores",
    "generate_synthetic_corpus",
]
