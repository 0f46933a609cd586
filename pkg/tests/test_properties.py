import unittest
import sys
import os

from hypothesis import HealthCheck, given, settings, strategies as st

# Ensure the 'src' directory is in the Python path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from src.algebra import radical_power, truncated_polynomial, validate_algebra
from src.dimensions import Interval, interval_max
from src.field import FieldSpec
from src.linalg import Subspace
from src.modules import random_change_of_basis, regular_module
from src.resolutions import is_isomorphic
from src.rings import LambdaSpec, build_lambda, validate_lambda_spec
from src.tilting import verify_theorem

F101 = FieldSpec.prime_field(101)

vectors = st.lists(st.lists(st.integers(0, 100), min_size=4, max_size=4), max_size=4)


@st.composite
def power_chains(draw):
    """(m, n, ks): A = k[x]/(x^m) and I_j = rad^{k_j} with k_2 ≤ ... ≤ k_n."""
    m = draw(st.integers(1, 3))
    n = draw(st.integers(2, 3))
    ks = sorted(draw(st.lists(st.integers(1, 3), min_size=n - 1, max_size=n - 1)))
    return m, n, ks


def _power_spec(m, n, ks):
    A = truncated_polynomial(F101, m)
    return LambdaSpec.uniform(A, [radical_power(A, k) for k in ks], name=f"powers-{m}-{n}")


@st.composite
def varied_shapes(draw):
    """(m, n, ks, ts, cs): A_i = k·1 + rad^{t_i}, I_j = rad^{k_j}, I_ij = rad^{c_ij}."""
    m, n, ks = draw(power_chains())
    ts = [draw(st.integers(0, k)) for k in ks]
    cs = {}
    for gap in range(1, n - 1):
        for j in range(2, n + 1 - gap):
            i = j + gap
            c = draw(st.integers(0, ks[j - 2]))
            for l in range(j + 1, i):
                c = min(c, cs[(i, l)] + cs[(l, j)])
            cs[(i, j)] = c
    return m, n, ks, ts, cs


def _varied_spec(m, n, ks, ts, cs):
    A = truncated_polynomial(F101, m)
    unit = Subspace.span(F101, A.dim, [A.unit])
    subrings = [unit + radical_power(A, t) for t in ts]
    return LambdaSpec.uniform(A, [radical_power(A, k) for k in ks], subrings=subrings,
                              cross=lambda i, j: radical_power(A, cs[(i, j)]),
                              name=f"varied-{m}-{n}")


class TestSubspaceLattice(unittest.TestCase):
    """Echelon subspaces behave like a lattice."""

    @settings(max_examples=40, deadline=None)
    @given(vectors, vectors)
    def test_dimension_formula(self, us, ws):
        """dim(U + W) + dim(U ∩ W) = dim U + dim W."""
        U = Subspace.span(F101, 4, [F101.vector(v) for v in us])
        W = Subspace.span(F101, 4, [F101.vector(v) for v in ws])
        meet = U.intersect(W)
        self.assertEqual((U + W).dim + meet.dim, U.dim + W.dim)
        self.assertTrue(meet.issubspace(U) and meet.issubspace(W))
        self.assertTrue(U.issubspace(U + W))

    @settings(max_examples=40, deadline=None)
    @given(vectors)
    def test_echelon_form_is_canonical(self, us):
        """Spanning the echelon rows again gives the same subspace."""
        U = Subspace.span(F101, 4, [F101.vector(v) for v in us])
        self.assertEqual(Subspace.span(F101, 4, U.rows), U)


class TestIntervalLaws(unittest.TestCase):
    """Extended-integer intervals."""

    @given(st.integers(0, 50), st.integers(0, 50))
    def test_points_add_and_max(self, a, b):
        """Point intervals add and compare like integers."""
        self.assertEqual(Interval.point(a) + Interval.point(b), Interval.point(a + b))
        self.assertEqual(interval_max([Interval.point(a), Interval.point(b)]),
                         Interval.point(max(a, b)))


class TestPowerChains(unittest.TestCase):
    """Λ over k[x]/(x^m) with I_j = rad^{k_j}."""

    @settings(max_examples=100, deadline=None, derandomize=True,
              suppress_health_check=[HealthCheck.too_slow])
    @given(power_chains())
    def test_lambda_dimension(self, chain):
        """dim Λ = nm + (n-1)m + (n-1)·Σ dim I_j, and Λ is associative."""
        m, n, ks = chain
        spec = _power_spec(m, n, ks)
        self.assertTrue(validate_lambda_spec(spec).ok)
        ring = build_lambda(spec)
        expected = n * m + (n - 1) * m + (n - 1) * sum(max(m - k, 0) for k in ks)
        self.assertEqual(ring.dim, expected)
        self.assertTrue(validate_algebra(ring.algebra).ok)

    @settings(max_examples=6, deadline=None)
    @given(power_chains())
    def test_endomorphism_ring_is_sigma(self, chain):
        """The tilting pipeline succeeds and End(T) has the dimension of Σ."""
        report = verify_theorem(_power_spec(*chain))
        self.assertTrue(report.ok, report.summary())
        self.assertEqual(report.end_dim, report.sigma_dim)

    @settings(max_examples=100, deadline=None, derandomize=True,
              suppress_health_check=[HealthCheck.too_slow])
    @given(varied_shapes())
    def test_varied_subrings_and_cross_ideals(self, shape):
        """Smaller A_i and I_ij: the certificate, tilting checks and Hom lattice all hold."""
        spec = _varied_spec(*shape)
        self.assertTrue(validate_lambda_spec(spec).ok, spec.summary())
        report = verify_theorem(spec)
        self.assertTrue(report.ok, report.summary())
        self.assertTrue(report.certificate.valid)
        self.assertTrue(report.tilting.ok)
        self.assertTrue(all(e.ok for e in report.lattice))
        self.assertTrue(report.vanishing.ok)


class TestIsomorphismSearch(unittest.TestCase):
    """Seeded isomorphism search on conjugated modules."""

    @settings(max_examples=5, deadline=None)
    @given(st.integers(0, 1000))
    def test_conjugates_are_found(self, seed):
        """Every random change of basis of k[x]/(x^3) is recognised."""
        M = regular_module(truncated_polynomial(F101, 3))
        N, _ = random_change_of_basis(M, seed=seed)
        self.assertTrue(is_isomorphic(M, N, seed=seed).isomorphic)


if __name__ == '__main__':
    unittest.main()
