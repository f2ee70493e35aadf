"""Business logic layer for the AC context detector.

Core algorithm components:
- Tokenizer, Naive Bayes and linear SGD message scorers
- ContextEngine: message omission, actor significance, transcript context
- MetricsCalculator: confusion outcomes, F-beta, rate changes, MLA percentages
- Validator: threshold and experiment configuration validation
"""

from .context_engine import ContextEngine
from .linear import score_linear, train_linear
from .message_analysis import evaluate_mla
from .metrics import MetricsCalculator
from .naive_bayes import score_nb, train_nb
from .scorers import ExternalScorer, LinearScorer, NbScorer, Scorer, build_scorer, scorer_for_model
from .significance import binomial_tail_p, binomial_two_tailed_p
from .tokenizer import build_vocabulary, featurize, tokenize
from .validator import Validator

__all__ = [
    "ContextEngine",
    "score_linear", "train_linear",
    "evaluate_mla",
    "MetricsCalculator",
    "score_nb", "train_nb",
    "ExternalScorer", "LinearScorer", "NbScorer", "Scorer", "build_scorer", "scorer_for_model",
    "binomial_tail_p", "binomial_two_tailed_p",
    "build_vocabulary", "featurize", "tokenize",
    "Validator",
]
