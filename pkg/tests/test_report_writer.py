"""Unit tests for report output files."""

import csv
import json
import tempfile
import unittest
from pathlib import Path

from data.synthetic import generate_synthetic_corpus
from harness.experiments import run_interset, run_sweep
from harness.pdf_report import REPORTLAB_AVAILABLE, PdfReport
from harness.report_writer import context_csv_rows, write_report
from models import ExperimentConfig


class TestReportWriter(unittest.TestCase):
    """Test cases for write_report."""

    @classmethod
    def setUpClass(cls):
        cls.corpus = generate_synthetic_corpus(60, seed=9)
        cls.config = ExperimentConfig(scorer="nb", t_grid=[0.2, 0.4], ast_grid=[0.05, 0.01], seed=9)

    def setUp(self):
        self.temp_dir = tempfile.TemporaryDirectory()
        self.root = Path(self.temp_dir.name)

    def tearDown(self):
        self.temp_dir.cleanup()

    def test_outputs_are_byte_identical_across_runs(self):
        """Two runs with the same seed write identical files."""
        first = write_report(run_interset(self.config, self.corpus), str(self.root / "a"))
        second = write_report(run_interset(self.config, self.corpus), str(self.root / "b"))

        self.assertEqual([p.name for p in first], [p.name for p in second])
        for a, b in zip(first, second):
            self.assertEqual(a.read_bytes(), b.read_bytes(), a.name)

    def test_written_files(self):
        """Context, MLA, determinations and manifest files are written into a new directory."""
        report = run_interset(self.config, self.corpus)
        out_dir = self.root / "nested" / "out"
        written = write_report(report, str(out_dir))

        self.assertEqual(
            sorted(p.name for p in written),
            ["context_report.csv", "determinations.jsonl", "manifest.json", "mla_report.csv"],
        )
        with open(out_dir / "context_report.csv", encoding="utf-8", newline="") as f:
            rows = list(csv.reader(f))
        self.assertEqual(rows[0], ["model", "scorer", "t_adult", "t_child", "ast",
                                   "tp", "fp", "tn", "fn", "f1", "o_pct"])
        self.assertEqual(len(rows), 1 + 4)
        self.assertEqual(rows[1][:5], ["nb", "nb", "0.200000", "0.200000", "0.050000"])

        records = (out_dir / "determinations.jsonl").read_text(encoding="utf-8").splitlines()
        self.assertEqual(len(records), 4 * report.transcripts_evaluated)
        first = json.loads(records[0])
        self.assertEqual(set(first), {"id", "context", "actors", "t_adult", "t_child", "ast"})

    def test_manifest(self):
        """The manifest echoes seed, configuration, digests and the best row."""
        report = run_interset(self.config, self.corpus)
        write_report(report, str(self.root))
        manifest = json.loads((self.root / "manifest.json").read_text(encoding="utf-8"))

        self.assertEqual(manifest["seed"], 9)
        self.assertEqual(manifest["kind"], "interset")
        self.assertEqual(manifest["config"]["t_grid"], [0.2, 0.4])
        self.assertIn("corpus", manifest["corpus_digests"])
        self.assertEqual(manifest["best"]["f1"], report.best_row().f1)
        self.assertIn("numpy", manifest["versions"])
        self.assertIn("manifest.json", manifest["outputs"])

    def test_sweep_file_name(self):
        """Sweeps write sweep_report.csv."""
        report = run_sweep(self.config, self.corpus)
        names = [p.name for p in write_report(report, str(self.root))]
        self.assertIn("sweep_report.csv", names)
        self.assertNotIn("context_report.csv", names)

    def test_model_name_column(self):
        """A model name replaces the scorer in the model column."""
        config = ExperimentConfig(scorer="nb", t_grid=[0.2], ast_grid=[0.05], model_name="NB-bow")
        rows = context_csv_rows(run_interset(config, self.corpus))
        self.assertEqual(rows[1][:2], ["NB-bow", "nb"])

    @unittest.skipUnless(REPORTLAB_AVAILABLE, "ReportLab not installed")
    def test_pdf_report(self):
        """The optional PDF summary is a PDF document."""
        report = run_interset(self.config, self.corpus)
        written = write_report(report, str(self.root), pdf=True)

        self.assertIn("report.pdf", [p.name for p in written])
        self.assertTrue((self.root / "report.pdf").read_bytes().startswith(b"%PDF"))
        self.assertTrue(PdfReport.is_available())


if __name__ == '__main__':
    unittest.main()
