"""
Unit tests for the ContextEngine module.

Tests context determination including:
- Omission band boundaries
- Actor significance labels
- XOR combination of actor labels
- Whole-transcript determination and its error cases
- Monotonicity and symmetry over randomized transcripts
"""

import random
import unittest

from errors import MissingScore, NotPeerToPeer
from logic.context_engine import ContextEngine
from logic.significance import binomial_tail_p
from models import (
    ActorDetermination, ActorLabel, Message, MessageScore, OgLabel, Role,
    Source, Thresholds, Transcript, TranscriptContext,
)
from models.experiment import DeterminationRecord

T_CHOICES = [0.0, 0.1, 0.2, 0.25, 0.3, 0.4, 0.45, 0.49]
AST_GRID = [0.001, 0.01, 0.05, 0.1, 0.2]


def make_transcript(actor_scores, transcript_id="t1", og_label=OgLabel.POSITIVE):
    """Build a two-actor transcript and its score map.

    Args:
        actor_scores: List of (actor_id, score) in transcript order

    Returns:
        Tuple of (Transcript, ordinal -> MessageScore)
    """
    messages = []
    scores = {}
    for ordinal, (actor, value) in enumerate(actor_scores):
        messages.append(Message(actor_id=actor, ordinal=ordinal, text=f"msg {ordinal}"))
        scores[ordinal] = MessageScore(value, "test")
    transcript = Transcript(
        id=transcript_id,
        source=Source.OTHER,
        messages=messages,
        actor_ids={"x", "y"},
        og_label=og_label,
    )
    return transcript, scores


def random_transcript(rng):
    length = rng.randint(1, 30)
    return make_transcript([(rng.choice("xy"), rng.random()) for _ in range(length)])


class TestOmission(unittest.TestCase):
    """Test cases for the omission band."""

    def test_low_confidence_score_omitted_at_every_threshold(self):
        """A score of 0.38972 is omitted at t = 0.2, 0.3, 0.4 and 0.45."""
        for t in (0.2, 0.3, 0.4, 0.45):
            self.assertTrue(ContextEngine.is_omitted(0.38972, Thresholds.symmetric(t)))

    def test_confident_scores_kept_at_widest_band(self):
        """Scores 0.99998 and 0.01687 survive t = 0.45 as Adult and Child."""
        thresholds = Thresholds.symmetric(0.45)
        self.assertEqual(ContextEngine.classify_included(0.99998, thresholds), Role.ADULT)
        self.assertEqual(ContextEngine.classify_included(0.01687, thresholds), Role.CHILD)

    def test_score_on_upper_bound_is_adult(self):
        """A score exactly on 0.5 + t is included and classified Adult."""
        self.assertFalse(ContextEngine.is_omitted(0.70, Thresholds.symmetric(0.2)))
        self.assertEqual(ContextEngine.classify_included(0.70, Thresholds.symmetric(0.2)), Role.ADULT)
        self.assertEqual(ContextEngine.classify_included(0.75, Thresholds.symmetric(0.25)), Role.ADULT)

    def test_score_on_lower_bound_is_child(self):
        """A score exactly on 0.5 - t is included and classified Child."""
        self.assertFalse(ContextEngine.is_omitted(0.30, Thresholds.symmetric(0.2)))
        self.assertEqual(ContextEngine.classify_included(0.30, Thresholds.symmetric(0.2)), Role.CHILD)

    def test_bounds_of_grid_thresholds_are_inclusive(self):
        """Scores written as 0.5 -/+ t are included for grid values where 0.5 - t is inexact."""
        for t, child, adult in ((0.45, 0.05, 0.95), (0.4, 0.1, 0.9), (0.35, 0.15, 0.85), (0.3, 0.2, 0.8)):
            with self.subTest(t=t):
                thresholds = Thresholds.symmetric(t)
                self.assertFalse(ContextEngine.is_omitted(child, thresholds))
                self.assertFalse(ContextEngine.is_omitted(adult, thresholds))
                self.assertEqual(ContextEngine.classify_included(child, thresholds), Role.CHILD)
                self.assertEqual(ContextEngine.classify_included(adult, thresholds), Role.ADULT)
        self.assertEqual(Thresholds.symmetric(0.45).lower_bound, 0.05)
        self.assertEqual(Thresholds.symmetric(0.4).lower_bound, 0.1)

    def test_midpoint_omitted_with_zero_band(self):
        """With t = 0 a score of exactly 0.5 is omitted, anything else is kept."""
        thresholds = Thresholds.symmetric(0.0)
        self.assertTrue(ContextEngine.is_omitted(0.5, thresholds))
        self.assertEqual(ContextEngine.classify_included(0.5000001, thresholds), Role.ADULT)
        self.assertEqual(ContextEngine.classify_included(0.4999999, thresholds), Role.CHILD)

    def test_asymmetric_band(self):
        """t_adult and t_child move the two bounds independently."""
        thresholds = Thresholds(t_adult=0.4, t_child=0.1)
        self.assertTrue(ContextEngine.is_omitted(0.8, thresholds))
        self.assertEqual(ContextEngine.classify_included(0.4, thresholds), Role.CHILD)
        self.assertEqual(ContextEngine.classify_included(0.95, thresholds), Role.ADULT)

    def test_classify_omitted_score_raises(self):
        """Classifying a score inside the band raises ValueError."""
        with self.assertRaises(ValueError):
            ContextEngine.classify_included(0.5, Thresholds.symmetric(0.2))

    def test_included_labels_drops_omitted(self):
        """included_labels keeps only scores outside the band."""
        labels = ContextEngine.included_labels(
            [MessageScore(0.9, "t"), 0.5, 0.1, 0.6], Thresholds.symmetric(0.2)
        )
        self.assertEqual(labels, [Role.ADULT, Role.CHILD])


class TestDetermineActor(unittest.TestCase):
    """Test cases for actor significance determination."""

    def test_significant_adult_majority(self):
        """15 Adult of 20 included messages is A at AST 0.05."""
        labels = [Role.ADULT] * 15 + [Role.CHILD] * 5
        result = ContextEngine.determine_actor("x", labels, 0.05)
        self.assertEqual(result.label, ActorLabel.A)
        self.assertEqual((result.n_included, result.k_adult), (20, 15))
        self.assertAlmostEqual(result.p_value, 21700 / 1048576, places=12)

    def test_same_majority_not_significant_at_strict_ast(self):
        """15 of 20 is NS at AST 0.01."""
        labels = [Role.ADULT] * 15 + [Role.CHILD] * 5
        self.assertEqual(ContextEngine.determine_actor("x", labels, 0.01).label, ActorLabel.NS)

    def test_child_majority(self):
        """18 Child of 20 is C; its p-value is the upper tail at 18."""
        labels = [Role.CHILD] * 18 + [Role.ADULT] * 2
        result = ContextEngine.determine_actor("y", labels, 0.001)
        self.assertEqual(result.label, ActorLabel.C)
        self.assertAlmostEqual(result.p_value, 211 / 1048576, places=12)

    def test_p_value_equal_to_ast_is_significant(self):
        """The AST comparison is inclusive."""
        labels = [Role.ADULT] * 15 + [Role.CHILD] * 5
        ast = binomial_tail_p(15, 20)
        self.assertEqual(ContextEngine.determine_actor("x", labels, ast).label, ActorLabel.A)

    def test_no_included_messages(self):
        """An actor with every message omitted is NS with p = 1."""
        result = ContextEngine.determine_actor("x", [], 0.05)
        self.assertEqual(result.label, ActorLabel.NS)
        self.assertEqual(result.p_value, 1.0)
        self.assertEqual(result.n_included, 0)

    def test_even_split(self):
        """An even split is NS with p = 1."""
        result = ContextEngine.determine_actor("x", [Role.ADULT, Role.CHILD] * 5, 0.2)
        self.assertEqual(result.label, ActorLabel.NS)
        self.assertEqual(result.p_value, 1.0)

    def test_single_message_never_significant_below_half(self):
        """One included message has p = 0.5."""
        result = ContextEngine.determine_actor("x", [Role.ADULT], 0.2)
        self.assertEqual(result.label, ActorLabel.NS)
        self.assertAlmostEqual(result.p_value, 0.5)

    def test_two_tailed(self):
        """The two-tailed p-value doubles the tail."""
        labels = [Role.ADULT] * 15 + [Role.CHILD] * 5
        result = ContextEngine.determine_actor("x", labels, 0.05, two_tailed=True)
        self.assertEqual(result.label, ActorLabel.A)
        self.assertAlmostEqual(result.p_value, 2 * 21700 / 1048576, places=12)
        self.assertEqual(ContextEngine.determine_actor("x", labels, 0.04, two_tailed=True).label, ActorLabel.NS)


class TestDetermineContext(unittest.TestCase):
    """Test cases for combining two actor labels."""

    @staticmethod
    def _actor(label):
        return ActorDetermination("a", 0, 0, 1.0, label)

    def test_all_label_combinations(self):
        """Only (A, C) and (C, A) give AC; NS dominates."""
        expected = {
            (ActorLabel.A, ActorLabel.A): TranscriptContext.AA,
            (ActorLabel.A, ActorLabel.C): TranscriptContext.AC,
            (ActorLabel.A, ActorLabel.NS): TranscriptContext.NS,
            (ActorLabel.C, ActorLabel.A): TranscriptContext.AC,
            (ActorLabel.C, ActorLabel.C): TranscriptContext.CC,
            (ActorLabel.C, ActorLabel.NS): TranscriptContext.NS,
            (ActorLabel.NS, ActorLabel.A): TranscriptContext.NS,
            (ActorLabel.NS, ActorLabel.C): TranscriptContext.NS,
            (ActorLabel.NS, ActorLabel.NS): TranscriptContext.NS,
        }
        for (a, b), context in expected.items():
            with self.subTest(a=a, b=b):
                self.assertEqual(
                    ContextEngine.determine_context(self._actor(a), self._actor(b)), context
                )


class TestRunContext(unittest.TestCase):
    """Test cases for whole-transcript determination."""

    def test_adult_and_child_actor_give_ac(self):
        """15/20 Adult-scored and 18/20 Child-scored actors give AC at AST 0.05."""
        scores = [("x", 0.9)] * 15 + [("x", 0.1)] * 5 + [("y", 0.1)] * 18 + [("y", 0.9)] * 2
        transcript, score_map = make_transcript(scores)

        context, determinations = ContextEngine.run_context(transcript, score_map, Thresholds.symmetric(0.2))

        self.assertEqual(context, TranscriptContext.AC)
        self.assertEqual([d.actor_id for d in determinations], ["x", "y"])
        self.assertEqual([d.label for d in determinations], [ActorLabel.A, ActorLabel.C])

    def test_fully_omitted_actor_gives_ns(self):
        """An actor whose messages all fall in the band makes the transcript NS."""
        scores = [("x", 0.9)] * 15 + [("y", 0.55)] * 10
        transcript, score_map = make_transcript(scores)

        context, determinations = ContextEngine.run_context(transcript, score_map, Thresholds.symmetric(0.2))

        self.assertEqual(context, TranscriptContext.NS)
        self.assertEqual(determinations[1].n_included, 0)

    def test_three_actors_raise(self):
        """A transcript with three actors is not peer-to-peer."""
        transcript, score_map = make_transcript([("x", 0.9), ("y", 0.1), ("z", 0.9)])
        transcript.actor_ids = {"x", "y", "z"}
        with self.assertRaises(NotPeerToPeer):
            ContextEngine.run_context(transcript, score_map, Thresholds())

    def test_missing_score_raises(self):
        """Every message needs a score."""
        transcript, score_map = make_transcript([("x", 0.9), ("y", 0.1)])
        del score_map[1]
        with self.assertRaises(MissingScore):
            ContextEngine.run_context(transcript, score_map, Thresholds())

    def test_raw_float_scores_accepted(self):
        """Score maps may hold plain floats."""
        transcript, score_map = make_transcript([("x", 0.9)] * 6 + [("y", 0.1)] * 6)
        floats = {ordinal: score.value for ordinal, score in score_map.items()}
        context, _ = ContextEngine.run_context(transcript, floats, Thresholds.symmetric(0.2, ast=0.05))
        self.assertEqual(context, TranscriptContext.AC)

    def test_determination_record(self):
        """The determinations record carries id, context and per-actor details."""
        transcript, score_map = make_transcript([("x", 0.9)] * 6 + [("y", 0.1)] * 6)
        context, determinations = ContextEngine.run_context(transcript, score_map, Thresholds())
        record = DeterminationRecord(transcript.id, 0.2, 0.2, 0.05, context, determinations).to_dict()
        self.assertNotIn("ast", record)
        self.assertEqual(record["id"], "t1")
        self.assertEqual(record["context"], "AC")
        self.assertEqual([a["actor"] for a in record["actors"]], ["x", "y"])
        self.assertEqual(record["actors"][0]["k"], 6)


class TestContextProperties(unittest.TestCase):
    """Randomized checks of monotonicity and symmetry."""

    CASES = 1000

    def setUp(self):
        self.rng = random.Random(20240611)

    def test_omitted_set_grows_with_band(self):
        """Widening either band width never un-omits a message."""
        for _ in range(self.CASES):
            t1 = (self.rng.choice(T_CHOICES), self.rng.choice(T_CHOICES))
            t2 = (self.rng.choice([t for t in T_CHOICES if t >= t1[0]]),
                  self.rng.choice([t for t in T_CHOICES if t >= t1[1]]))
            narrow = Thresholds(t_adult=t1[0], t_child=t1[1])
            wide = Thresholds(t_adult=t2[0], t_child=t2[1])
            # Include bound values so the open-band edges are exercised
            candidates = [self.rng.random() for _ in range(10)]
            candidates += [narrow.upper_bound, narrow.lower_bound, wide.upper_bound, wide.lower_bound, 0.5]
            for value in candidates:
                if ContextEngine.is_omitted(value, narrow):
                    self.assertTrue(ContextEngine.is_omitted(value, wide), (value, t1, t2))

    def test_ac_set_grows_with_ast(self):
        """A transcript that is AC at some AST stays AC at every larger AST."""
        for _ in range(self.CASES):
            transcript, score_map = random_transcript(self.rng)
            t = self.rng.choice(T_CHOICES)
            was_ac = False
            for ast in AST_GRID:
                context, _ = ContextEngine.run_context(transcript, score_map, Thresholds.symmetric(t, ast))
                is_ac = context is TranscriptContext.AC
                if was_ac:
                    self.assertTrue(is_ac)
                was_ac = is_ac

    def test_fn_and_fp_monotone_in_ast(self):
        """As the AST grows FN never increases and FP never decreases."""
        for _ in range(self.CASES // 10):
            corpus = []
            for index in range(8):
                transcript, score_map = random_transcript(self.rng)
                transcript.og_label = self.rng.choice([OgLabel.POSITIVE, OgLabel.NEGATIVE])
                corpus.append((transcript, score_map))

            previous = None
            for ast in AST_GRID:
                fn = fp = 0
                for transcript, score_map in corpus:
                    context, _ = ContextEngine.run_context(transcript, score_map, Thresholds.symmetric(0.2, ast))
                    ac = context is TranscriptContext.AC
                    fn += transcript.og_label is OgLabel.POSITIVE and not ac
                    fp += transcript.og_label is OgLabel.NEGATIVE and ac
                if previous is not None:
                    self.assertLessEqual(fn, previous[0])
                    self.assertGreaterEqual(fp, previous[1])
                previous = (fn, fp)

    def test_score_complement_swaps_labels(self):
        """Replacing every score s by 1 - s swaps A and C, and AA and CC."""
        swap_actor = {ActorLabel.A: ActorLabel.C, ActorLabel.C: ActorLabel.A, ActorLabel.NS: ActorLabel.NS}
        swap_context = {
            TranscriptContext.AC: TranscriptContext.AC,
            TranscriptContext.AA: TranscriptContext.CC,
            TranscriptContext.CC: TranscriptContext.AA,
            TranscriptContext.NS: TranscriptContext.NS,
        }
        for _ in range(self.CASES):
            transcript, score_map = random_transcript(self.rng)
            complement = {o: MessageScore(1.0 - s.value, "test") for o, s in score_map.items()}
            thresholds = Thresholds.symmetric(self.rng.choice(T_CHOICES), self.rng.choice(AST_GRID))

            context, actors = ContextEngine.run_context(transcript, score_map, thresholds)
            flipped, flipped_actors = ContextEngine.run_context(transcript, complement, thresholds)

            self.assertEqual(flipped, swap_context[context])
            for original, mirrored in zip(actors, flipped_actors):
                self.assertEqual(mirrored.label, swap_actor[original.label])

    def test_actor_order_does_not_matter(self):
        """determine_context is symmetric in its arguments."""
        labels = list(ActorLabel)
        for _ in range(self.CASES):
            a = ActorDetermination("a", 0, 0, 1.0, self.rng.choice(labels))
            b = ActorDetermination("b", 0, 0, 1.0, self.rng.choice(labels))
            self.assertEqual(ContextEngine.determine_context(a, b), ContextEngine.determine_context(b, a))

    def test_omitted_messages_do_not_change_determination(self):
        """Adding messages inside the band leaves every actor determination unchanged."""
        for _ in range(self.CASES):
            transcript, score_map = random_transcript(self.rng)
            t = self.rng.choice([0.2, 0.3, 0.4, 0.45])
            thresholds = Thresholds.symmetric(t, self.rng.choice(AST_GRID))

            padded = [(m.actor_id, score_map[m.ordinal].value) for m in transcript.messages]
            for _ in range(self.rng.randint(1, 10)):
                position = self.rng.randint(0, len(padded))
                padded.insert(position, (self.rng.choice("xy"), self.rng.uniform(0.5 - t / 2, 0.5 + t / 2)))
            padded_transcript, padded_scores = make_transcript(padded)

            context, actors = ContextEngine.run_context(transcript, score_map, thresholds)
            padded_context, padded_actors = ContextEngine.run_context(padded_transcript, padded_scores, thresholds)

            self.assertEqual(context, padded_context)
            self.assertEqual(
                [(d.n_included, d.k_adult, d.label) for d in actors],
                [(d.n_included, d.k_adult, d.label) for d in padded_actors],
            )


if __name__ == '__main__':
    unittest.main()
