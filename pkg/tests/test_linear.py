"""Unit tests for the SGD-trained linear scorers."""

import unittest

import numpy as np

from data.synthetic import generate_synthetic_corpus
from errors import ConfigError
from logic.context_engine import ContextEngine
from logic.linear import decision_to_score, score_linear, train_linear
from models import LinearKind, LinearModel, Message, Role, Thresholds


class TestLinear(unittest.TestCase):
    """Test cases for train_linear and score_linear."""

    @classmethod
    def setUpClass(cls):
        cls.corpus = generate_synthetic_corpus(n_transcripts=10, seed=3, noise=0.0)

    def test_hinge_separates_clean_corpus(self):
        """On a noise-free corpus the hinge model classifies every training message."""
        model = train_linear(self.corpus, LinearKind.HINGE, epochs=30)
        for transcript in self.corpus:
            for message in transcript.messages:
                expected = 1.0 if message.gold_role is Role.ADULT else 0.0
                self.assertEqual(score_linear(model, message).value, expected)

    def test_hinge_scores_are_hard(self):
        """Hinge scores are exactly 0 or 1, so no band below 0.5 omits anything."""
        model = train_linear(self.corpus, LinearKind.HINGE, epochs=2)
        messages = [m for t in self.corpus for m in t.messages]
        messages.append(Message(actor_id="?", ordinal=0, text="unseen words only"))
        for message in messages:
            value = score_linear(model, message).value
            self.assertIn(value, (0.0, 1.0))
            for t in (0.2, 0.3, 0.4, 0.45, 0.49):
                self.assertFalse(ContextEngine.is_omitted(value, Thresholds.symmetric(t)))

    def test_logistic_scores_are_probabilities(self):
        """Logistic scores lie strictly inside (0, 1) and follow the gold role."""
        model = train_linear(self.corpus, LinearKind.LOGISTIC, epochs=5)
        self.assertEqual(score_linear(model, self.corpus[0].messages[0]).scorer_id, "logistic")
        adult = [score_linear(model, m).value for t in self.corpus for m in t.messages if m.gold_role is Role.ADULT]
        child = [score_linear(model, m).value for t in self.corpus for m in t.messages if m.gold_role is Role.CHILD]
        self.assertGreater(np.mean(adult), 0.5)
        self.assertLess(np.mean(child), 0.5)

    def test_training_is_deterministic(self):
        """Equal seeds give identical weights."""
        first = train_linear(self.corpus, LinearKind.LOGISTIC, epochs=3, seed=11)
        second = train_linear(self.corpus, LinearKind.LOGISTIC, epochs=3, seed=11)
        np.testing.assert_array_equal(first.weights, second.weights)
        self.assertEqual(first.bias, second.bias)
        self.assertEqual(first.vocabulary, second.vocabulary)

    def test_invalid_hyperparameters(self):
        """epochs < 1 or a non-positive learning rate raise ConfigError."""
        with self.assertRaises(ConfigError):
            train_linear(self.corpus, epochs=0)
        with self.assertRaises(ConfigError):
            train_linear(self.corpus, learning_rate=0.0)

    def test_decision_to_score(self):
        """Hinge thresholds at 0; logistic applies the sigmoid."""
        self.assertEqual(decision_to_score(LinearKind.HINGE, 0.0), 1.0)
        self.assertEqual(decision_to_score(LinearKind.HINGE, -0.01), 0.0)
        self.assertEqual(decision_to_score(LinearKind.LOGISTIC, 0.0), 0.5)
        self.assertAlmostEqual(decision_to_score(LinearKind.LOGISTIC, 2.0), 1 / (1 + np.exp(-2.0)))

    def test_hand_built_model(self):
        """score_linear sums counted weights plus the bias."""
        model = LinearModel(vocabulary={"a": 0, "b": 1}, weights=np.array([1.5, -2.0]),
                            bias=0.25, kind=LinearKind.LOGISTIC)
        message = Message(actor_id="x", ordinal=0, text="a a b")
        self.assertAlmostEqual(score_linear(model, message).value, 1 / (1 + np.exp(-1.25)))


if __name__ == '__main__':
    unittest.main()
