"""Bag-of-words tokenization without linguistic preprocessing."""

from collections import Counter
from typing import Dict, Iterable, List, Tuple

import numpy as np


def tokenize(text: str) -> List[str]:
    """Lowercase a message and split it on whitespace.

    Punctuation stays inside tokens, so emoticons such as "(:-*)" survive.

    Args:
        text: Raw message text

    Returns:
        Tokens in message order; empty for empty text
    """
    return text.lower().split()


def build_vocabulary(texts: Iterable[str]) -> Dict[str, int]:
    """Map every token seen in the texts to a column index.

    Indices follow sorted token order, so equal inputs give equal vocabularies.
    """
    tokens = set()
    for text in texts:
        tokens.update(tokenize(text))
    return {token: index for index, token in enumerate(sorted(tokens))}


def featurize(text: str, vocabulary: Dict[str, int]) -> Tuple[np.ndarray, np.ndarray]:
    """Sparse token-count vector of a message over a vocabulary.

    Tokens outside the vocabulary are dropped.

    Args:
        text: Raw message text
        vocabulary: Token -> column index

    Returns:
        Tuple of (indices, counts), indices ascending
    """
    counts = Counter(token for token in tokenize(text) if token in vocabulary)
    if not counts:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.float64)
    indices = np.array(sorted(vocabulary[token] for token in counts), dtype=np.int64)
    by_index = {vocabulary[token]: count for token, count in counts.items()}
    values = np.array([by_index[int(i)] for i in indices], dtype=np.float64)
    return indices, values
