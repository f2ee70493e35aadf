"""Unit tests for the synthetic corpus generator."""

import unittest

from data.synthetic import generate_synthetic_corpus
from models import OgLabel, Role, Source


class TestSyntheticCorpus(unittest.TestCase):
    """Test cases for generate_synthetic_corpus."""

    def test_seeded_generation_is_reproducible(self):
        """Equal seeds give equal corpora, different seeds differ."""
        first = generate_synthetic_corpus(20, seed=5)
        second = generate_synthetic_corpus(20, seed=5)
        other = generate_synthetic_corpus(20, seed=6)
        self.assertEqual([t.to_dict() for t in first], [t.to_dict() for t in second])
        self.assertNotEqual([t.to_dict() for t in first], [t.to_dict() for t in other])

    def test_positive_transcripts(self):
        """Positive transcripts pair one Adult and one Child actor."""
        corpus = generate_synthetic_corpus(15, seed=2)
        self.assertEqual([t.id for t in corpus[:2]], ["synth-0000", "synth-0001"])
        for transcript in corpus:
            self.assertEqual(transcript.og_label, OgLabel.POSITIVE)
            self.assertEqual(transcript.source, Source.OTHER)
            self.assertTrue(transcript.is_peer_to_peer)
            self.assertTrue(30 <= len(transcript.messages) <= 44)
            self.assertIn(transcript.attacker_id, transcript.actor_ids)
            self.assertEqual([m.ordinal for m in transcript.messages], list(range(len(transcript.messages))))
            for message in transcript.messages:
                expected = Role.ADULT if message.actor_id == transcript.attacker_id else Role.CHILD
                self.assertEqual(message.gold_role, expected)

    def test_negative_transcripts(self):
        """Negative transcripts carry no attacker and unknown roles."""
        corpus = generate_synthetic_corpus(40, seed=4, negative_fraction=1.0)
        for transcript in corpus:
            self.assertEqual(transcript.og_label, OgLabel.NEGATIVE)
            self.assertIsNone(transcript.attacker_id)
            self.assertTrue(all(m.gold_role is Role.UNKNOWN for m in transcript.messages))

    def test_noise_free_messages_use_own_lexicon(self):
        """Without noise Adult and Child messages share no token."""
        corpus = generate_synthetic_corpus(10, seed=8, noise=0.0)
        adult = {tok for t in corpus for m in t.messages if m.gold_role is Role.ADULT for tok in m.text.split()}
        child = {tok for t in corpus for m in t.messages if m.gold_role is Role.CHILD for tok in m.text.split()}
        self.assertTrue(adult)
        self.assertTrue(child)
        self.assertEqual(adult & child, set())

    def test_invalid_arguments(self):
        """Out-of-range rates and ranges raise ValueError."""
        with self.assertRaises(ValueError):
            generate_synthetic_corpus(5, noise=0.5)
        with self.assertRaises(ValueError):
            generate_synthetic_corpus(5, negative_fraction=1.5)
        with self.assertRaises(ValueError):
            generate_synthetic_corpus(5, messages_range=(10, 5))


if __name__ == '__main__':
    unittest.main()
