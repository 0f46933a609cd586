import unittest
import sys
import os

# Ensure the 'src' directory is in the Python path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from src.algebra import validate_algebra
from src.cli import run
from src.corpus import CORPUS_PREFIX, corpus, corpus_entry, corpus_names
from src.field import FieldSpec
from src.rings import build_block_extension, build_lambda, build_sigma, build_tiled_triangular


def _rings(entry):
    """Every ring an entry describes: Λ and Σ, the block extension, the tiled ring."""
    rings = []
    if entry.lam is not None:
        spec = entry.lambda_spec()
        rings += [build_lambda(spec), build_sigma(spec)]
    if entry.block is not None:
        rings.append(build_block_extension(entry.block_spec()))
    if entry.tiled is not None:
        rings.append(build_tiled_triangular(entry.tiled_spec()))
    return rings


class TestCorpus(unittest.TestCase):
    """The bundled examples and controls."""

    def test_names(self):
        """Entries are listed in name order and include the worked examples."""
        names = corpus_names()
        self.assertEqual(names, sorted(names))
        self.assertGreaterEqual(len(names), 8)
        for name in ("example-1", "example-2-n3", "example-3", "lambda-dual-numbers"):
            self.assertIn(name, names)

    def test_prefix_and_unknown_names(self):
        """'corpus:' is optional; unknown names raise KeyError."""
        self.assertEqual(corpus_entry(CORPUS_PREFIX + "lambda-field").name, "lambda-field")
        with self.assertRaises(KeyError):
            corpus_entry("no-such-entry")

    def test_entries_over_a_prime_field(self):
        """Every ring of every entry builds over F_101 with the dimensions it has over Q."""
        F101 = FieldSpec.prime_field(101)
        entries = corpus(F101)
        self.assertEqual([e.name for e in entries], corpus_names())
        for entry, rational in zip(entries, corpus()):
            with self.subTest(entry=entry.name):
                self.assertEqual(entry.field, F101)
                pairs = _rings(entry), _rings(rational)
                self.assertTrue(pairs[0])
                self.assertEqual(len(pairs[0]), len(pairs[1]))
                for ring, over_q in zip(*pairs):
                    self.assertEqual(ring.algebra.field, F101)
                    self.assertEqual(ring.dim, over_q.dim)
                    self.assertEqual(ring.entry_dims(), over_q.entry_dims())
                    self.assertTrue(validate_algebra(ring.algebra).ok)

    def test_every_entry_validates(self):
        """Each bundled spec passes validation."""
        for entry in corpus():
            with self.subTest(entry=entry.name):
                report, code = run("validate", entry)
                self.assertEqual(code, 0, report.to_json())

    def test_every_lambda_entry_passes_verify_thm1(self):
        """verify-thm1 exits 0 on each entry with a lambda section."""
        entries = [entry for entry in corpus() if entry.lam is not None]
        self.assertGreaterEqual(len(entries), 6)
        for entry in entries:
            with self.subTest(entry=entry.name):
                report, code = run("verify-thm1", entry)
                self.assertEqual(code, 0, report.to_json())

    def test_example_2(self):
        """Over k[x]/(x^3) the 4×4 ring has dimension 34 and the tiled ring 38."""
        spec = corpus_entry("example-2-n3")
        self.assertEqual(spec.kinds(), ["lambda", "tiled"])
        self.assertEqual(build_lambda(spec.lambda_spec()).dim, 34)
        self.assertEqual(build_tiled_triangular(spec.tiled_spec()).dim, 38)

    def test_cor33_variant(self):
        """n = 3 over k[x]/(x^3) with I_ij = A: Λ has dimension 22 and Σ 10."""
        spec = corpus_entry("cor33-variant2")
        self.assertEqual(build_lambda(spec.lambda_spec()).dim, 22)
        self.assertEqual(build_sigma(spec.lambda_spec()).dim, 10)


if __name__ == '__main__':
    unittest.main()
