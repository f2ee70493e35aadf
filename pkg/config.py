"""Configuration and constants for the AC context detector."""

from typing import Dict, List, Tuple

# ============================================================================
# Project
# ============================================================================
PROJECT_NAME = "ac-context-detector"
VERSION = "1.0.0"

# ============================================================================
# Corpus Ingestion
# ============================================================================
MIN_MESSAGES_CORPUS = 10            # Transcripts shorter than this are not admitted
MIN_MESSAGES_MLA = 31               # PAN12 message-level analysis uses "more than 30"
LABEL_BALANCE_LIMIT = 0.70          # Share above which a transcript needs manual review
CANONICAL_FORMAT_VERSION = 1

# Source and label spellings used by the canonical JSONL format
SOURCE_PJ = "PJ"
SOURCE_PAN12 = "PAN12"
SOURCE_OTHER = "Other"

# PJ page structure: first matching container holds the chat lines
CHAT_CONTAINER_SELECTORS: List[str] = [".code_chat", ".chatlog", "#chat"]
BLOCK_TAGS = frozenset({
    "p", "div", "li", "tr", "td", "h1", "h2", "h3", "h4", "h5", "h6",
    "blockquote", "pre", "table", "section", "article",
})
IGNORED_TAGS = frozenset({"script", "style", "head", "title"})
SENDER_DELIMITER = ":"

# Style markers for attacker ("blue bold") lines
BLUE_COLORS = frozenset({"blue", "#0000ff", "#00f", "rgb(0,0,255)"})
BOLD_WEIGHTS = frozenset({"bold", "bolder", "700", "800", "900"})
BOLD_TAGS = frozenset({"b", "strong"})

# E-mail transcripts are excluded at ingestion
EMAIL_HEADER_MARKERS: Tuple[str, ...] = ("from:", "subject:")

# ============================================================================
# Scoring
# ============================================================================
DEFAULT_ALPHA = 1.0                 # Laplace smoothing
DEFAULT_EPOCHS = 10
DEFAULT_LEARNING_RATE = 0.1
DEFAULT_SEED = 42
MODEL_FORMAT_VERSION = 1

SCORER_NB = "nb"
SCORER_HINGE = "hinge"
SCORER_LOGISTIC = "logistic"
SCORER_EXTERNAL = "external"
SCORER_KINDS: Tuple[str, ...] = (SCORER_NB, SCORER_HINGE, SCORER_LOGISTIC, SCORER_EXTERNAL)

SCORES_FILE_HEADER: Tuple[str, str, str] = ("transcript_id", "ordinal", "score")

# ============================================================================
# Context Determination
# ============================================================================
DEFAULT_T = 0.2
DEFAULT_AST = 0.05
DECISION_MIDPOINT = 0.5
BOUND_DIGITS = 12                   # Band bounds are rounded so 0.5 - 0.45 == 0.05

# ============================================================================
# Experiments
# ============================================================================
DEFAULT_SPLIT_FRACTION = 0.8
DEFAULT_T_GRID: List[float] = [0.2, 0.3, 0.4, 0.45]
DEFAULT_AST_GRID: List[float] = [0.05, 0.01, 0.001]
EXTENDED_T_GRID: List[float] = [0.45, 0.47, 0.49]
EXTENDED_AST_GRID: List[float] = [0.05, 0.10, 0.15, 0.20]
DEFAULT_BETA = 1.0

# ============================================================================
# Report Files
# ============================================================================
CONTEXT_REPORT_FILE = "context_report.csv"
MLA_REPORT_FILE = "mla_report.csv"
SWEEP_REPORT_FILE = "sweep_report.csv"
DETERMINATIONS_FILE = "determinations.jsonl"
MANIFEST_FILE = "manifest.json"
PDF_REPORT_FILE = "report.pdf"

CONTEXT_REPORT_COLUMNS: List[str] = [
    "model", "scorer", "t_adult", "t_child", "ast",
    "tp", "fp", "tn", "fn", "f1", "o_pct",
]
MLA_REPORT_COLUMNS: List[str] = [
    "model", "scorer", "t_adult", "t_child",
    "tp", "ia", "ic", "o", "total", "tp_pct", "ia_pct", "ic_pct", "o_pct",
]
FLOAT_PRECISION = 6                 # Decimal places written to CSV reports

# ============================================================================
# Registry Locking
# ============================================================================
LOCK_SUFFIX = ".lock"
LOCK_TIMEOUT_SECONDS = 3600         # 1 hour - lock file expiration

# ============================================================================
# Synthetic Corpora
# ============================================================================
SYNTH_ADULT_LEXICON: List[str] = [
    "mortgage", "commute", "invoice", "colleague", "divorce", "tax", "whiskey",
    "pension", "overtime", "landlord", "wife", "meeting", "client", "beer",
    "garage", "insurance", "salary", "boss", "car", "apartment",
]
SYNTH_CHILD_LEXICON: List[str] = [
    "homework", "mom", "teacher", "recess", "lol", "grade", "bus", "math",
    "dad", "sleepover", "cartoon", "allowance", "class", "bedtime", "xbox",
    "school", "bestie", "summer", "detention", "babysitter",
]
SYNTH_NOISE_RATE = 0.15

# Exit codes
EXIT_OK = 0
EXIT_CONFIG_ERROR = 1
EXIT_DATA_ERROR = 2

# Mapping used by the CLI for --format
INGEST_FORMATS: Dict[str, str] = {
    "pj": SOURCE_PJ,
    "pan12": SOURCE_PAN12,
    "jsonl": SOURCE_OTHER,
}
