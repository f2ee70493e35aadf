"""Unit tests for bag-of-words tokenization."""

import unittest

import numpy as np

from logic.tokenizer import build_vocabulary, featurize, tokenize


class TestTokenizer(unittest.TestCase):
    """Test cases for tokenize, build_vocabulary and featurize."""

    def test_lowercase_whitespace_split(self):
        """Text is lowercased and split on whitespace only."""
        self.assertEqual(tokenize("im old 49 here"), ["im", "old", "49", "here"])
        self.assertEqual(tokenize("Hey  THERE\tyou\n"), ["hey", "there", "you"])

    def test_emoticons_survive(self):
        """Punctuation-only tokens are kept whole."""
        self.assertEqual(tokenize("(:-*)"), ["(:-*)"])
        self.assertEqual(tokenize("ok :) bye!"), ["ok", ":)", "bye!"])

    def test_empty_text(self):
        """Empty or blank text has no tokens."""
        self.assertEqual(tokenize(""), [])
        self.assertEqual(tokenize("   "), [])

    def test_vocabulary_sorted_and_stable(self):
        """Indices follow sorted token order regardless of input order."""
        first = build_vocabulary(["b a", "c"])
        second = build_vocabulary(["c", "a b b"])
        self.assertEqual(first, {"a": 0, "b": 1, "c": 2})
        self.assertEqual(first, second)

    def test_featurize_counts(self):
        """Repeated tokens are counted and unknown tokens dropped."""
        vocabulary = {"a": 0, "b": 1, "c": 2}
        indices, counts = featurize("C a zz c", vocabulary)
        np.testing.assert_array_equal(indices, [0, 2])
        np.testing.assert_array_equal(counts, [1.0, 2.0])

    def test_featurize_no_known_tokens(self):
        """A message without known tokens gives empty arrays."""
        indices, counts = featurize("zz yy", {"a": 0})
        self.assertEqual(indices.size, 0)
        self.assertEqual(counts.size, 0)


if __name__ == '__main__':
    unittest.main()
