"""Polynomial factorization through the canonical components."""

import math
import random

import pytest

from quadfield import (
    AlgebraKind,
    ComplexQuad,
    Factorization,
    NoConvergence,
    Poly,
    Quad,
    QuadfieldError,
    SingularValue,
    enumerate_factorizations,
    eval_poly,
    factor,
    one,
    pair_conjugates,
    quadratic_factor,
    reconstruct,
    zero,
)

from conftest import KINDS, max_abs_diff, random_quad

SQRT2 = math.sqrt(2.0)


def upoly(kind, *tail):
    """Monic polynomial with constant tail given as plain floats."""
    coeffs = [one(kind)]
    coeffs += [Quad(kind, float(c), 0.0, 0.0, 0.0) for c in tail]
    return Poly(kind, tuple(coeffs))


def coeffs_close(p, q, tol):
    assert p.kind is q.kind and p.degree == q.degree
    worst = 0.0
    for a, b in zip(p.coeffs, q.coeffs):
        scale = max(1.0, max(abs(c) for c in a.components))
        worst = max(worst, max_abs_diff(a, b) / scale)
    return worst <= tol


class TestPoly:
    def test_monic_required(self):
        kind = AlgebraKind.CIRCULAR
        with pytest.raises(ValueError, match="monic"):
            Poly(kind, (Quad(kind, 2, 0, 0, 0), one(kind)))

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            Poly(AlgebraKind.CIRCULAR, ())

    def test_kind_mismatch_rejected(self):
        with pytest.raises(ValueError, match="kind"):
            Poly(AlgebraKind.CIRCULAR,
                 (one(AlgebraKind.CIRCULAR), one(AlgebraKind.POLAR)))

    def test_degree(self):
        assert upoly(AlgebraKind.POLAR, 0.0, -1.0).degree == 2

    def test_from_coefficients_normalizes(self):
        kind = AlgebraKind.HYPERBOLIC
        lead = Quad(kind, 2.0, 0.0, 0.0, 0.0)
        p = Poly.from_coefficients(kind, (lead, Quad(kind, 4, 0, 0, 0)))
        assert p.coeffs[0] == one(kind)
        assert max_abs_diff(p.coeffs[1], Quad(kind, 2, 0, 0, 0)) < 1e-15

    def test_from_coefficients_singular_lead(self):
        kind = AlgebraKind.HYPERBOLIC
        nodal = Quad(kind, 1.0, 1.0, 1.0, 1.0)   # s' = s''' = 0
        with pytest.raises(SingularValue):
            Poly.from_coefficients(kind, (nodal, one(kind)))


class TestEvalPoly:
    def test_identity_poly(self):
        kind = AlgebraKind.PLANAR
        p = Poly(kind, (one(kind), zero(kind)))
        u = Quad(kind, 1, 2, 3, 4)
        assert eval_poly(p, u) == u

    def test_circular_alpha_root_of_u2_plus_1(self):
        p = upoly(AlgebraKind.CIRCULAR, 0.0, 1.0)
        alpha = Quad(AlgebraKind.CIRCULAR, 0, 1, 0, 0)
        assert eval_poly(p, alpha) == zero(AlgebraKind.CIRCULAR)

    def test_hyperbolic_one_root_of_u2_minus_1(self):
        p = upoly(AlgebraKind.HYPERBOLIC, 0.0, -1.0)
        assert eval_poly(p, one(AlgebraKind.HYPERBOLIC)) == zero(
            AlgebraKind.HYPERBOLIC)

    def test_kind_mismatch(self):
        p = upoly(AlgebraKind.CIRCULAR, 0.0, 1.0)
        with pytest.raises(ValueError):
            eval_poly(p, one(AlgebraKind.POLAR))


class TestFactorWorkedExamples:
    def test_circular_u2_plus_1(self):
        kind = AlgebraKind.CIRCULAR
        f = factor(upoly(kind, 0.0, 1.0))
        assert f.residual < 1e-12
        assert not f.has_complex_roots
        got = sorted(r.components for r in f.roots)
        assert got == [(0, -1, 0, 0), (0, 1, 0, 0)]   # -alpha, +alpha

    def test_hyperbolic_u2_minus_1(self):
        kind = AlgebraKind.HYPERBOLIC
        f = factor(upoly(kind, 0.0, -1.0))
        got = sorted(r.components for r in f.roots)
        assert got == [(-1, 0, 0, 0), (1, 0, 0, 0)]

    def test_polar_u2_minus_1(self):
        kind = AlgebraKind.POLAR
        f = factor(upoly(kind, 0.0, -1.0))
        got = sorted(r.components for r in f.roots)
        assert got == [(-1, 0, 0, 0), (1, 0, 0, 0)]

    def test_planar_u2_plus_1(self):
        kind = AlgebraKind.PLANAR
        f = factor(upoly(kind, 0.0, 1.0))
        h = 1.0 / SQRT2
        got = sorted(r.components for r in f.roots)
        want = [(0.0, -h, 0.0, -h), (0.0, h, 0.0, h)]   # +-(alpha+gamma)/sqrt2
        for g, w in zip(got, want):
            assert max(abs(a - b) for a, b in zip(g, w)) < 1e-12

    def test_degree_zero_rejected(self):
        with pytest.raises(ValueError):
            factor(Poly(AlgebraKind.CIRCULAR, (one(AlgebraKind.CIRCULAR),)))

    def test_no_convergence_is_reportable(self):
        assert issubclass(NoConvergence, QuadfieldError)


class TestEnumerate:
    COUNTS = {
        AlgebraKind.CIRCULAR: (1.0, 2),    # u^2+1 -> 2
        AlgebraKind.PLANAR: (1.0, 2),      # u^2+1 -> 2
        AlgebraKind.HYPERBOLIC: (-1.0, 8),  # u^2-1 -> 8
        AlgebraKind.POLAR: (-1.0, 4),      # u^2-1 -> 4
    }

    @pytest.mark.parametrize("kind", KINDS)
    def test_worked_example_counts(self, kind):
        const, count = self.COUNTS[kind]
        p = upoly(kind, 0.0, const)
        facts = enumerate_factorizations(p)
        assert len(facts) == count
        for f in facts:
            assert coeffs_close(reconstruct(f, kind), p, 1e-8)

    def test_circular_pairings_are_alpha_and_beta(self):
        kind = AlgebraKind.CIRCULAR
        facts = enumerate_factorizations(upoly(kind, 0.0, 1.0))
        seen = {tuple(sorted(r.components for r in f.roots)) for f in facts}
        assert ((0, -1, 0, 0), (0, 1, 0, 0)) in seen      # +-alpha
        assert ((0, 0, -1, 0), (0, 0, 1, 0)) in seen      # +-beta

    def test_cap_truncates(self):
        p = upoly(AlgebraKind.HYPERBOLIC, 0.0, -1.0)
        assert len(enumerate_factorizations(p, cap=3)) == 3
        with pytest.raises(ValueError):
            enumerate_factorizations(p, cap=0)

    def test_random_cubic_enumeration_reconstructs(self):
        kind = AlgebraKind.HYPERBOLIC
        rng = random.Random(7)
        coeffs = [one(kind)] + [random_quad(kind, rng, span=0.8)
                                for _ in range(3)]
        p = Poly(kind, tuple(coeffs))
        facts = enumerate_factorizations(p, cap=50)
        assert facts
        for f in facts:
            assert coeffs_close(reconstruct(f, kind), p, 1e-8)


class TestReconstruct:
    def test_alpha_pair_gives_u2_plus_1(self):
        kind = AlgebraKind.CIRCULAR
        f = Factorization(roots=(Quad(kind, 0, 1, 0, 0),
                                 Quad(kind, 0, -1, 0, 0)), residual=0.0)
        assert reconstruct(f, kind).coeffs == upoly(kind, 0.0, 1.0).coeffs

    def test_gamma_pair_gives_u2_minus_1(self):
        kind = AlgebraKind.CIRCULAR
        f = Factorization(roots=(Quad(kind, 0, 0, 0, 1),
                                 Quad(kind, 0, 0, 0, -1)), residual=0.0)
        assert reconstruct(f, kind).coeffs == upoly(kind, 0.0, -1.0).coeffs

    def test_unpaired_complex_root_rejected(self):
        kind = AlgebraKind.HYPERBOLIC
        lone = ComplexQuad(kind, 1j, 0j, 0j, 0j)
        with pytest.raises(ValueError, match="conjugate"):
            reconstruct(Factorization(roots=(lone,), residual=0.0), kind)


class TestRandomRoundTrip:
    @pytest.mark.parametrize("kind", KINDS)
    def test_reconstruct_factor_round_trip(self, kind):
        rng = random.Random(hash(kind.value) & 0xFFFF)
        for _ in range(25):
            degree = rng.randint(1, 5)
            coeffs = [one(kind)] + [random_quad(kind, rng, span=1.0)
                                    for _ in range(degree)]
            p = Poly(kind, tuple(coeffs))
            f = factor(p)
            assert len(f.roots) == degree
            assert coeffs_close(reconstruct(f, kind), p, 1e-7)
            for r in f.roots:
                if isinstance(r, Quad):
                    v = eval_poly(p, r)
                    assert max(abs(c) for c in v.components) <= 1e-7

    def test_double_root(self):
        # (u-1)^2: repeated component roots converge more slowly but the
        # reconstruction still lands well inside the contract
        for kind in KINDS:
            p = upoly(kind, -2.0, 1.0)
            f = factor(p)
            assert coeffs_close(reconstruct(f, kind), p, 1e-7)
            for r in f.roots:
                assert max_abs_diff(r, one(kind)) < 1e-5


class TestConjugatePairs:
    def test_hyperbolic_u2_plus_1_pairs(self):
        kind = AlgebraKind.HYPERBOLIC
        p = upoly(kind, 0.0, 1.0)
        f = factor(p)
        assert f.has_complex_roots
        reals, pairs, leftovers = pair_conjugates(f)
        assert reals == [] and leftovers == []
        assert len(pairs) == 1
        s, q = quadratic_factor(pairs[0], kind)
        assert max_abs_diff(s, zero(kind)) < 1e-12   # u^2 - 0u + 1
        assert max_abs_diff(q, one(kind)) < 1e-12

    def test_polar_quartic_leftovers(self):
        # u^4 - 1 over polar: the distinguished-plane root bound to each
        # +-i line root is consumed once, so no componentwise-conjugate
        # partner exists; the complex roots come back unpaired but the
        # per-line closure still reconstructs real coefficients
        kind = AlgebraKind.POLAR
        p = upoly(kind, 0.0, 0.0, 0.0, -1.0)
        f = factor(p)
        assert len(f.roots) == 4
        assert f.residual < 1e-10
        reals, pairs, leftovers = pair_conjugates(f)
        assert len(reals) == 2 and not pairs and len(leftovers) == 2
        assert sorted(r.components for r in reals) == [
            (-1, 0, 0, 0), (1, 0, 0, 0)]
        assert coeffs_close(reconstruct(f, kind), p, 1e-8)
        assert enumerate_factorizations(p) == []

    def test_polar_quadratic_with_conjugate_pair(self):
        # v-line components l^2+1 (roots +-i), distinguished plane (w-1)^2:
        # the shared w root makes the two roots componentwise conjugates
        kind = AlgebraKind.POLAR
        p = Poly(kind, (one(kind), Quad(kind, -1, 0, 1, 0), one(kind)))
        f = factor(p)
        assert f.has_complex_roots
        reals, pairs, leftovers = pair_conjugates(f)
        assert not reals and not leftovers and len(pairs) == 1
        s, q = quadratic_factor(pairs[0], kind)
        # (u - r)(u - conj r) = u^2 - s u + q reproduces p
        assert max_abs_diff(s, Quad(kind, 1, 0, -1, 0)) < 1e-7
        assert max_abs_diff(q, one(kind)) < 1e-7

    def test_real_roots_pass_through(self):
        kind = AlgebraKind.CIRCULAR
        f = factor(upoly(kind, 0.0, -1.0))   # u^2-1, gamma-free real pair
        reals, pairs, leftovers = pair_conjugates(f)
        assert len(reals) == 2 and not pairs and not leftovers
