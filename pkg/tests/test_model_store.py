"""Unit tests for model persistence."""

import json
import tempfile
import unittest
from pathlib import Path

from data.model_store import load_model, save_model
from data.synthetic import generate_synthetic_corpus
from errors import ModelFormatError
from logic.scorers import scorer_for_model
from logic.linear import train_linear
from logic.naive_bayes import train_nb
from models import LinearKind, LinearModel, NbModel


class TestModelStore(unittest.TestCase):
    """Test cases for save_model and load_model."""

    @classmethod
    def setUpClass(cls):
        cls.corpus = generate_synthetic_corpus(n_transcripts=6, seed=1)

    def setUp(self):
        self.temp_dir = tempfile.TemporaryDirectory()
        self.root = Path(self.temp_dir.name)

    def tearDown(self):
        self.temp_dir.cleanup()

    def _assert_same_scores(self, model, loaded):
        original = scorer_for_model(model)
        restored = scorer_for_model(loaded)
        for transcript in self.corpus[:3]:
            self.assertEqual(
                {k: v.value for k, v in original.score_transcript(transcript).items()},
                {k: v.value for k, v in restored.score_transcript(transcript).items()},
            )

    def test_nb_model_reloads(self):
        """A reloaded NB model scores identically."""
        model = train_nb(self.corpus, alpha=0.5)
        path = str(self.root / "models" / "nb.json")
        save_model(model, path)
        loaded = load_model(path)

        self.assertIsInstance(loaded, NbModel)
        self.assertEqual(loaded.alpha, 0.5)
        self.assertEqual(loaded.vocabulary, model.vocabulary)
        self._assert_same_scores(model, loaded)

    def test_linear_models_reload(self):
        """Reloaded hinge and logistic models score identically."""
        for kind in LinearKind:
            model = train_linear(self.corpus, kind, epochs=2)
            path = str(self.root / f"{kind.value}.json")
            save_model(model, path)
            loaded = load_model(path)

            self.assertIsInstance(loaded, LinearModel)
            self.assertIs(loaded.kind, kind)
            self._assert_same_scores(model, loaded)

    def test_file_is_self_describing(self):
        """The file names its kind and format version."""
        path = self.root / "nb.json"
        save_model(train_nb(self.corpus), str(path))
        data = json.loads(path.read_text(encoding="utf-8"))
        self.assertEqual(data["kind"], "nb")
        self.assertEqual(data["format_version"], 1)
        self.assertIn("vocabulary", data)

    def test_unknown_version_or_kind(self):
        """Unknown versions and kinds raise ModelFormatError."""
        path = self.root / "nb.json"
        save_model(train_nb(self.corpus), str(path))
        data = json.loads(path.read_text(encoding="utf-8"))

        for change in ({"format_version": 99}, {"kind": "forest"}):
            broken = self.root / "broken.json"
            broken.write_text(json.dumps({**data, **change}), encoding="utf-8")
            with self.assertRaises(ModelFormatError):
                load_model(str(broken))

    def test_not_a_model(self):
        """Invalid JSON and incomplete models raise ModelFormatError."""
        path = self.root / "junk.json"
        path.write_text("[1, 2", encoding="utf-8")
        with self.assertRaises(ModelFormatError):
            load_model(str(path))

        path.write_text(json.dumps({"format_version": 1, "kind": "nb"}), encoding="utf-8")
        with self.assertRaises(ModelFormatError):
            load_model(str(path))


if __name__ == '__main__':
    unittest.main()
