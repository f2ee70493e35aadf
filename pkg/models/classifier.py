"""Trainable message classifier models."""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List

import numpy as np

# Row order of the per-class arrays
ADULT = 0
CHILD = 1


def _vocabulary_list(vocabulary: Dict[str, int]) -> List[str]:
    """Return vocabulary tokens in index order."""
    tokens = [""] * len(vocabulary)
    for token, index in vocabulary.items():
        tokens[index] = token
    return tokens


@dataclass(eq=False)
class NbModel:
    """Multinomial Naive Bayes over bag-of-words token counts.

    Attributes:
        vocabulary: Token -> column index
        class_token_counts: Shape (2, V) token counts for (Adult, Child)
        class_doc_counts: Shape (2,) message counts for (Adult, Child)
        alpha: Additive smoothing constant, > 0
    """
    vocabulary: Dict[str, int]
    class_token_counts: np.ndarray
    class_doc_counts: np.ndarray
    alpha: float = 1.0

    def class_log_prior(self) -> np.ndarray:
        """Log class priors from message counts; an empty class gets -inf."""
        with np.errstate(divide="ignore"):
            return np.log(self.class_doc_counts) - np.log(self.class_doc_counts.sum())

    def feature_log_prob(self) -> np.ndarray:
        """Smoothed log P(token | class), shape (2, V)."""
        smoothed = self.class_token_counts + self.alpha
        return np.log(smoothed) - np.log(smoothed.sum(axis=1, keepdims=True))

    def to_dict(self) -> dict:
        return {
            "kind": "nb",
            "vocabulary": _vocabulary_list(self.vocabulary),
            "parameters": {
                "alpha": self.alpha,
                "class_token_counts": self.class_token_counts.tolist(),
                "class_doc_counts": self.class_doc_counts.tolist(),
            },
        }

    @classmethod
    def from_dict(cls, data: dict) -> "NbModel":
        parameters = data["parameters"]
        return cls(
            vocabulary={token: index for index, token in enumerate(data["vocabulary"])},
            class_token_counts=np.asarray(parameters["class_token_counts"], dtype=np.int64)
                .reshape(2, len(data["vocabulary"])),
            class_doc_counts=np.asarray(parameters["class_doc_counts"], dtype=np.int64),
            alpha=float(parameters["alpha"]),
        )


class LinearKind(Enum):
    """Loss the linear model was trained with."""
    HINGE = "hinge"
    LOGISTIC = "logistic"


@dataclass(eq=False)
class LinearModel:
    """Linear model over bag-of-words counts.

    Hinge models emit hard 0/1 scores, logistic models calibrated scores.

    Attributes:
        vocabulary: Token -> weight index
        weights: Shape (V,) weight vector
        bias: Intercept
        kind: Training loss
    """
    vocabulary: Dict[str, int]
    weights: np.ndarray
    bias: float = 0.0
    kind: LinearKind = LinearKind.HINGE

    def decision(self, indices: np.ndarray, counts: np.ndarray) -> float:
        """Signed distance for a sparse count vector; positive means Adult."""
        return float(self.weights[indices] @ counts) + self.bias

    def to_dict(self) -> dict:
        # Only non-zero weights are stored
        nonzero = np.flatnonzero(self.weights)
        return {
            "kind": self.kind.value,
            "vocabulary": _vocabulary_list(self.vocabulary),
            "parameters": {
                "bias": self.bias,
                "weights": {str(int(i)): float(self.weights[i]) for i in nonzero},
            },
        }

    @classmethod
    def from_dict(cls, data: dict) -> "LinearModel":
        parameters = data["parameters"]
        weights = np.zeros(len(data["vocabulary"]), dtype=np.float64)
        for index, value in parameters["weights"].items():
            weights[int(index)] = float(value)
        return cls(
            vocabulary={token: index for index, token in enumerate(data["vocabulary"])},
            weights=weights,
            bias=float(parameters["bias"]),
            kind=LinearKind(data["kind"]),
        )
