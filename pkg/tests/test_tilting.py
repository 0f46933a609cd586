import unittest
import sys
import os
from dataclasses import replace

# Ensure the 'src' directory is in the Python path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from src.corpus import corpus, corpus_entry
from src.modules import ModuleMap
from src.resolutions import simple_modules
from src.rings import build_block_extension, build_lambda, build_sigma, lambda_as_block_spec
from src.tilting import (block_cokernel_modules, block_hom_vanishing, check_D_split,
                         cokernel_modules, construct_phi, derived_invariant_report,
                         endomorphism_algebra, gamma_split_instance, hom_lattice, hom_vanishing,
                         in_add, tilting_conditions, verify_theorem)


class TestTiltingModule(unittest.TestCase):
    """T = L_2 ⊕ ... ⊕ L_n ⊕ Λe_1 and its endomorphism ring."""

    def setUp(self):
        self.spec = corpus_entry("lambda-dual-numbers").lambda_spec()
        self.ring = build_lambda(self.spec)
        self.bundle = cokernel_modules(self.ring, self.spec)

    def test_defining_sequences_are_exact(self):
        """0 → Λe_2 → Λe_1 → L_2 → 0 is exact."""
        self.assertEqual(len(self.bundle.sequences), 1)
        seq = self.bundle.sequences[0]
        self.assertTrue(seq.check().ok)
        self.assertEqual(seq.cokernel.dim, seq.top_projective.dim - seq.projective.dim)

    def test_summand_order(self):
        """The last summand is Λe_1."""
        self.assertIs(self.bundle.top_projective, self.bundle.summands[-1])
        self.assertEqual(len(self.bundle.summands), 2)
        self.assertEqual(self.bundle.T.module.dim,
                         sum(M.dim for M in self.bundle.summands))

    def test_tilting_conditions(self):
        """pd T ≤ 1, Ext¹(T, T) = 0 and every Λe_i is generated."""
        report = tilting_conditions(self.bundle)
        self.assertTrue(report.ok, report.summary())

    def test_endomorphism_ring(self):
        """End(T) has the dimension of Σ and a valid unit."""
        end = endomorphism_algebra(self.bundle.summands)
        sigma = build_sigma(self.spec)
        self.assertEqual(end.dim, sigma.dim)
        self.assertEqual(sum(sum(row) for row in end.corner_dims()), end.dim)
        self.assertTrue(end.algebra.multiply(end.algebra.unit, end.algebra.unit)
                        == tuple(end.algebra.unit))

    def test_phi_certificate(self):
        """φ: Σ → End(T) is a ring isomorphism."""
        end = endomorphism_algebra(self.bundle.summands)
        cert = construct_phi(self.spec, self.bundle, end)
        self.assertTrue(cert.valid, cert.summary())
        self.assertEqual(cert.rank, 4)
        self.assertIsNone(cert.witness)

    def test_hom_lattice(self):
        """dim Hom(L_i, L_j) = dim e_iΛe_j − dim I_j."""
        for entry in hom_lattice(self.bundle, self.spec):
            self.assertTrue(entry.ok, entry)

    def test_hom_vanishing(self):
        """Hom(L_2, Λe_1) and Hom(L_2, Λe_2) are both zero."""
        report = hom_vanishing(self.bundle)
        self.assertTrue(report.ok, report.summary())
        self.assertEqual(report.checked, 2)

    def test_gamma_sequence_is_split(self):
        """0 → Λ → Γ → Γ/Λ → 0 is D-split for D = add(Λe_1)."""
        report = check_D_split(gamma_split_instance(self.ring))
        self.assertTrue(report.ok, report.summary())

    def test_gamma_sequence_mutations(self):
        """Breaking f, g or D each fails a named condition."""
        inst = gamma_split_instance(self.ring)
        no_f = replace(inst, f=ModuleMap.zero(inst.X, inst.M))
        self.assertIn("kernel", check_D_split(no_f).codes())
        no_g = replace(inst, g=ModuleMap.zero(inst.M, inst.Y))
        self.assertIn("cokernel", check_D_split(no_g).codes())
        simple = simple_modules(self.ring.algebra)[0]
        self.assertIn("add", check_D_split(replace(inst, category_D=(simple,))).codes())

    def test_add_membership(self):
        """Λe_1 lies in add(T); the simple over Λ at position 2 lies outside add(Λe_1)."""
        P1 = self.bundle.top_projective
        self.assertTrue(in_add(P1, self.bundle.summands))
        self.assertTrue(in_add(P1, [P1]))
        simples = simple_modules(self.ring.algebra)
        self.assertFalse(all(in_add(S, [P1]) for S in simples))


class TestTheoremPipeline(unittest.TestCase):
    """The whole derived-equivalence check on small rings."""

    def test_dual_numbers(self):
        """Λ over k[x]/(x^2) with I_2 = rad: dims 7, 4, 4."""
        report = verify_theorem(corpus_entry("lambda-dual-numbers").lambda_spec())
        self.assertTrue(report.ok, report.summary())
        self.assertEqual((report.lambda_dim, report.sigma_dim, report.end_dim), (7, 4, 4))
        data = report.to_dict()
        self.assertTrue(data["phi"]["valid"])
        self.assertEqual(data["dims"], {"lambda": 7, "sigma": 4, "end_T": 4})

    def test_field(self):
        """A = k, I_2 = 0: Λ and Σ are both T_2(k)."""
        report = verify_theorem(corpus_entry("lambda-field").lambda_spec())
        self.assertTrue(report.ok, report.summary())
        self.assertEqual((report.lambda_dim, report.sigma_dim, report.end_dim), (3, 3, 3))

    def test_three_by_three(self):
        """n = 3 over k[x]/(x^3) with I_ij = A."""
        report = verify_theorem(corpus_entry("cor33-variant2").lambda_spec())
        self.assertTrue(report.ok, report.summary())
        self.assertEqual((report.lambda_dim, report.sigma_dim, report.end_dim), (22, 10, 10))
        self.assertEqual(len(report.lattice), 4)
        self.assertEqual(len(report.star_sequences), 2)

    def test_invariants_agree(self):
        """Λ and Σ share their number of simples, |det C| and center dimension."""
        spec = corpus_entry("lambda-zero-ideal").lambda_spec()
        report = derived_invariant_report(build_lambda(spec).algebra, build_sigma(spec).algebra)
        self.assertTrue(report.ok, report.summary())
        self.assertEqual(report.left["simples"], 2)


class TestCorpusTheorem(unittest.TestCase):
    """Every Λ in the corpus through the whole pipeline."""

    @classmethod
    def setUpClass(cls):
        specs = [e.lambda_spec() for e in corpus() if e.lam is not None]
        cls.sizes = {spec.name: spec.n for spec in specs}
        cls.reports = {spec.name: verify_theorem(spec) for spec in specs}

    def test_instances(self):
        """At least six instances with n = 2, 3 and 4."""
        self.assertGreaterEqual(len(self.reports), 6)
        self.assertEqual(set(self.sizes.values()), {2, 3, 4})

    def test_certificates(self):
        """φ is a ring isomorphism Σ → End(T) on every instance."""
        for name, report in self.reports.items():
            with self.subTest(entry=name):
                self.assertTrue(report.certificate.valid, report.certificate.summary())
                self.assertEqual(report.end_dim, report.sigma_dim)
                self.assertTrue(report.ok, report.summary())

    def test_tilting_conditions(self):
        """pd T ≤ 1, Ext¹(T, T) = 0 and add(T) resolves every Λe_i."""
        for name, report in self.reports.items():
            with self.subTest(entry=name):
                self.assertTrue(report.tilting.ok, report.tilting.summary())

    def test_hom_lattice_and_vanishing(self):
        """The Hom lattice matches its prediction and Hom(L_i, Λe_1), Hom(L_i, Λe_i) vanish."""
        for name, report in self.reports.items():
            with self.subTest(entry=name):
                self.assertEqual(len(report.lattice), (self.sizes[name] - 1) ** 2)
                for entry in report.lattice:
                    self.assertTrue(entry.ok, entry)
                self.assertTrue(report.vanishing.ok, report.vanishing.summary())

    def test_split_sequences(self):
        """Λ → Γ → Γ/Λ and every defining sequence are D-split."""
        for name, report in self.reports.items():
            with self.subTest(entry=name):
                self.assertTrue(report.dsplit.ok, report.dsplit.summary())
                for star in report.star_sequences:
                    self.assertTrue(star.ok, star.summary())

    def test_invariants(self):
        """Λ and Σ agree on simples, |det C| and dim center."""
        for name, report in self.reports.items():
            with self.subTest(entry=name):
                self.assertTrue(report.invariants.ok, report.invariants.summary())


class TestBlockSequences(unittest.TestCase):
    """Defining sequences of lower-orientation block extensions."""

    def test_one_block(self):
        """A LambdaSpec read as one block has one sequence and nothing to vanish."""
        spec = lambda_as_block_spec(corpus_entry("lambda-dual-numbers").lambda_spec())
        ring = build_block_extension(spec)
        sequences = block_cokernel_modules(ring, spec)
        self.assertEqual(list(sequences), [(1, 2)])
        self.assertTrue(sequences[(1, 2)].check().ok)
        self.assertTrue(block_hom_vanishing(sequences).ok)

    def test_upper_orientation_is_refused(self):
        """Block cokernels are defined for the lower staircase only."""
        spec = corpus_entry("block-qf-dual").block_spec()
        with self.assertRaises(ValueError):
            block_cokernel_modules(build_block_extension(spec), spec)


if __name__ == '__main__':
    unittest.main()
