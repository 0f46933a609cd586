import unittest
import sys
import os

# Ensure the 'src' directory is in the Python path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from src.algebra import field_algebra, lower_triangular, matrix_algebra, truncated_polynomial
from src.constants import BRUTE_FORCE_MAX_DIM, STATUS_FAIL, STATUS_INCONCLUSIVE, STATUS_PASS
from src.corpus import corpus, corpus_entry
from src.dimensions import (BOUND_NAMES, EXACT_KIND, FINITISTIC_KIND, Budget, Inequality,
                            Interval, brute_force_gldim, check_bound,
                            check_prop_4_12_hypotheses, findim_estimate, global_dimension,
                            interval_max, interval_sum, is_self_injective, pd_max)
from src.field import FieldSpec
from src.linalg import Subspace
from src.resolutions import PdValue
from src.rings import LambdaSpec, build_lambda, build_sigma, build_tiled_triangular

INF = float("inf")

SMALL = Budget(8, 2, 4)


class TestIntervals(unittest.TestCase):
    """Interval arithmetic over the extended integers."""

    def test_addition(self):
        """Points add; an infinite end stays infinite; −∞ absorbs."""
        self.assertEqual(Interval.point(1) + Interval.point(2), Interval.point(3))
        self.assertEqual(Interval(0, INF) + 1, Interval(1, INF))
        self.assertEqual(Interval.point(-INF) + Interval.point(5), Interval.point(-INF))
        self.assertEqual(Interval.point(3) - 1, Interval.point(2))

    def test_max_and_sum(self):
        """Max is taken endpoint-wise; the empty sum is 0."""
        self.assertEqual(interval_max([Interval(0, 2), Interval(1, 1)]), Interval(1, 2))
        self.assertEqual(interval_sum([]), Interval.point(0))
        self.assertEqual(interval_max([]), Interval.point(-INF))

    def test_from_pd(self):
        """Each pd tag maps to its interval."""
        self.assertEqual(Interval.of_pd(PdValue.at_least(2)), Interval(2, INF))
        self.assertEqual(str(Interval.of_pd(PdValue.exact(1))), "1")
        self.assertEqual(Interval(2, INF).to_dict(), {"lo": 2, "hi": "inf"})

    def test_pd_max(self):
        """Infinite dominates; cut-off values stay lower bounds; zero modules are ignored."""
        self.assertEqual(pd_max([PdValue.exact(1), PdValue.infinite()]), PdValue.infinite())
        self.assertEqual(pd_max([PdValue.exact(3), PdValue.at_least(2)]), PdValue.at_least(3))
        self.assertEqual(pd_max([PdValue.zero_module()]), PdValue.zero_module())
        self.assertEqual(pd_max([PdValue.zero_module(), PdValue.exact(0)]), PdValue.exact(0))


class TestInequalities(unittest.TestCase):
    """Status of one inequality."""

    def test_exact_kind(self):
        """Pass needs lhs.hi ≤ rhs.lo; fail needs lhs.lo > rhs.hi."""
        self.assertEqual(Inequality("a", Interval.point(1), Interval.point(2)).status, STATUS_PASS)
        self.assertEqual(Inequality("b", Interval.point(3), Interval.point(2)).status, STATUS_FAIL)
        self.assertEqual(Inequality("c", Interval(1, INF), Interval.point(2)).status,
                         STATUS_INCONCLUSIVE)
        self.assertEqual(Inequality("d", Interval.point(INF), Interval.point(INF)).status,
                         STATUS_PASS)

    def test_finitistic_kind(self):
        """Finitistic inequalities pass whenever the intervals are consistent."""
        self.assertEqual(Inequality("e", Interval(1, INF), Interval(0, 2),
                                    FINITISTIC_KIND).status, STATUS_PASS)
        self.assertEqual(Inequality("f", Interval(3, 3), Interval(0, 2),
                                    FINITISTIC_KIND).status, STATUS_FAIL)
        self.assertEqual(Inequality("g", Interval.point(0), Interval.point(0), EXACT_KIND,
                                    STATUS_INCONCLUSIVE).status, STATUS_INCONCLUSIVE)


class TestBudget(unittest.TestCase):
    """Search budgets."""

    def test_parse(self):
        """'cap,samples,depth' round-trips through str."""
        budget = Budget.parse("24, 6, 6")
        self.assertEqual(budget, Budget(24, 6, 6))
        self.assertEqual(str(budget), "24,6,6")
        self.assertEqual(budget.to_dict(), {"max_module_dim": 24, "samples": 6, "depth": 6})

    def test_parse_errors(self):
        """Wrong arity, non-integers and out-of-range entries are refused."""
        for text in ("1,2", "a,b,c", "0,1,1", "4,-1,2"):
            with self.assertRaises(ValueError):
                Budget.parse(text)

    def test_overrides(self):
        """Unknown parameters are refused."""
        self.assertEqual(Budget.with_overrides(samples=2).samples, 2)
        with self.assertRaises(ValueError):
            Budget.with_overrides(width=3)


class TestGlobalDimension(unittest.TestCase):
    """gldim and self-injectivity of small algebras."""

    def setUp(self):
        self.F = FieldSpec.rationals()

    def test_known_values(self):
        """gldim k = 0, gldim T_2(k) = 1, gldim k[x]/(x^2) = ∞."""
        self.assertEqual(global_dimension(field_algebra(self.F)), PdValue.exact(0))
        self.assertEqual(global_dimension(lower_triangular(self.F, 2)), PdValue.exact(1))
        self.assertEqual(global_dimension(truncated_polynomial(self.F, 2)), PdValue.infinite())
        self.assertEqual(global_dimension(matrix_algebra(self.F, 2)), PdValue.exact(0))

    def test_self_injective(self):
        """Truncated polynomial rings and M_2(k) are self-injective; T_2(k) is not."""
        self.assertTrue(is_self_injective(truncated_polynomial(self.F, 3)))
        self.assertTrue(is_self_injective(matrix_algebra(self.F, 2)))
        self.assertFalse(is_self_injective(lower_triangular(self.F, 2)))

    def test_brute_force_agrees(self):
        """The exhaustive family reaches the global dimension of T_2(k)."""
        value, examined = brute_force_gldim(lower_triangular(self.F, 2))
        self.assertEqual(value, PdValue.exact(1))
        self.assertGreater(examined, 0)

    def test_depth_zero_after_deep_run(self):
        """A depth-0 query on Σ stays a lower bound after a depth-20 run."""
        A = build_sigma(corpus_entry("lambda-lower-triangular").lambda_spec()).algebra
        self.assertEqual(global_dimension(A, 20), PdValue.exact(2))
        self.assertEqual(global_dimension(A, 0), PdValue.at_least(1))
        self.assertEqual(global_dimension(A, 20), PdValue.exact(2))

    def test_brute_force_on_small_corpus_algebras(self):
        """On every corpus algebra of dimension at most six the exhaustive family agrees."""
        algebras = {}
        for entry in corpus():
            if entry.lam is not None:
                spec = entry.lambda_spec()
                algebras[entry.name + ":A"] = spec.base
                algebras[entry.name + ":Λ"] = build_lambda(spec).algebra
                algebras[entry.name + ":Σ"] = build_sigma(spec).algebra
            if entry.tiled is not None:
                algebras[entry.name + ":tiled"] = build_tiled_triangular(entry.tiled_spec()).algebra
        small = {name: A for name, A in algebras.items() if A.dim <= BRUTE_FORCE_MAX_DIM}
        self.assertGreaterEqual(len(small), 3)
        for name, A in sorted(small.items()):
            with self.subTest(algebra=name):
                value, examined = brute_force_gldim(A)
                self.assertEqual(value, global_dimension(A))
                self.assertGreater(examined, 0)

    def test_brute_force_on_semisimple(self):
        """Simple projectives count: k and M_2(k) have gldim 0."""
        for A in (field_algebra(self.F), matrix_algebra(self.F, 2)):
            self.assertEqual(brute_force_gldim(A)[0], PdValue.exact(0))


class TestFinitisticEstimate(unittest.TestCase):
    """Budgeted finitistic-dimension evidence."""

    def setUp(self):
        self.F = FieldSpec.rationals()

    def test_self_injective_upper_bound(self):
        """k[x]/(x^2) has fd = 0, certified by self-injectivity."""
        report = findim_estimate(truncated_polynomial(self.F, 2), SMALL)
        self.assertEqual(report.findim_lower, 0)
        self.assertEqual(report.findim_upper, PdValue.exact(0))
        self.assertEqual(report.upper_source, "self-injective")
        self.assertEqual(report.fd_interval, Interval.point(0))

    def test_finite_gldim_upper_bound(self):
        """For T_2(k) both ends equal gldim = 1."""
        report = findim_estimate(lower_triangular(self.F, 2), SMALL)
        self.assertEqual(report.fd_interval, Interval.point(1))
        self.assertEqual(report.upper_source, "gldim")
        self.assertGreater(report.members, 0)

    def test_report_keys_and_determinism(self):
        """The JSON view has a fixed key set and equal seeds give equal reports."""
        A = truncated_polynomial(self.F, 3)
        first = findim_estimate(A, SMALL, seed=9).to_dict()
        second = findim_estimate(A, SMALL, seed=9).to_dict()
        self.assertEqual(first, second)
        self.assertEqual(set(first), {"algebra", "gldim", "findim_lower", "findim_upper",
                                      "upper_source", "budget", "seed", "members", "cutoffs",
                                      "witnesses", "note"})


class TestBoundChecks(unittest.TestCase):
    """Named dimension statements evaluated on corpus rings."""

    def test_names(self):
        """Lambda and block statements are all registered."""
        self.assertEqual(len(BOUND_NAMES), 8)
        self.assertIn("cor_4_10", BOUND_NAMES)

    def test_gldim_bounds_on_triangular(self):
        """Λ = T_2(k): both global-dimension bounds pass."""
        spec = corpus_entry("lambda-field").lambda_spec()
        for name in ("cor_1_2_gld", "cor_4_11", "tilting_shift", "lemma_4_3_triangular"):
            check = check_bound(name, spec, budget=SMALL)
            self.assertEqual(check.status, STATUS_PASS, check.summary())

    def test_cor_4_11_needs_constant_columns(self):
        """Cross ideals different from I_j make the check inconclusive."""
        check = check_bound("cor_4_11", corpus_entry("example-1").lambda_spec(), budget=SMALL)
        self.assertEqual(check.status, STATUS_INCONCLUSIVE)
        self.assertTrue(any("hypothesis not met" in n for n in check.notes))

    def test_zero_ring_is_inconclusive(self):
        """I_2 = A_2 leaves Σ undefined."""
        F = FieldSpec.rationals()
        A = truncated_polynomial(F, 2)
        spec = LambdaSpec.uniform(A, [Subspace.full(F, 2)], name="zero-sigma")
        check = check_bound("tilting_shift", spec, budget=SMALL)
        self.assertEqual(check.status, STATUS_INCONCLUSIVE)

    def test_cor_4_10_dual_numbers(self):
        """fd P(2) ≤ 1 over the self-injective k[x]/(x^2)."""
        check = check_bound("cor_4_10", corpus_entry("block-qf-dual").block_spec(), budget=SMALL)
        self.assertEqual(check.status, STATUS_PASS, check.summary())
        self.assertEqual(check.rhs, Interval.point(1))
        self.assertTrue(check.inputs["self_injective(A)"]["value"])

    def test_cor_4_10_quiver_algebra(self):
        """fd P(3,2) ≤ 3 over the two-vertex quiver algebra."""
        check = check_bound("cor_4_10", corpus_entry("example-3").block_spec(), budget=SMALL)
        self.assertEqual(check.rhs, Interval.point(3))
        self.assertEqual(check.status, STATUS_PASS, check.summary())

    def test_wrong_kind_and_unknown_name(self):
        """Lambda checks need a LambdaSpec; unknown names are refused."""
        block = corpus_entry("block-qf-dual").block_spec()
        with self.assertRaises(TypeError):
            check_bound("cor_1_2_gld", block)
        with self.assertRaises(KeyError):
            check_bound("no_such_bound", block)

    def test_to_dict(self):
        """The JSON view carries status, inequalities and inputs."""
        data = check_bound("cor_1_2_gld", corpus_entry("lambda-field").lambda_spec()).to_dict()
        self.assertEqual(data["name"], "cor_1_2_gld")
        self.assertEqual(data["status"], STATUS_PASS)
        self.assertEqual(len(data["inequalities"]), 2)
        self.assertIn("gldim(Lambda)", data["inputs"])


class TestTiledHypotheses(unittest.TestCase):
    """Finiteness hypotheses of tiled triangular rings."""

    def test_triangular_base(self):
        """Over T_2(k) with rad next to the diagonal every hypothesis is verified."""
        report = check_prop_4_12_hypotheses(corpus_entry("tiled-cor413").tiled_spec(),
                                            budget=SMALL)
        self.assertEqual(report.verdict, "verified")
        self.assertEqual(report.status, STATUS_PASS)
        self.assertTrue(report.phi_consistent)
        self.assertEqual(len(report.hypotheses), 1)
        self.assertIn("fd(A)", report.screens)


if __name__ == '__main__':
    unittest.main()
