import cmath
import os
import unittest
from fractions import Fraction
from unittest import mock

import numpy as np

from trigcone.cone import eval_T, lift
from trigcone.config import get_settings
from trigcone.elim import mobius_discriminant
from trigcone.errors import DomainError, InputError, PreconditionError
from trigcone.poly import ComplexPoly, exact_poly
from trigcone.quadmap import (
    SpectralFactor,
    gram_lift,
    jacobian_det,
    jacobian_rank,
    jacobian_rows,
    lemma3_shadow,
    phi,
    shadow_residual,
    verify_lemma1,
    verify_lemma2,
)
from trigcone.scalar import GaussRational
from trigcone.verify import make_rng, random_factor


def g(re, im=0):
    return GaussRational(re, im)


class TestSpectralFactor(unittest.TestCase):

    def test_x0_positive_real(self):
        """x_0 must be real and positive"""
        with self.assertRaises(InputError):
            SpectralFactor(exact_poly([g(1, 1), 1]))
        with self.assertRaises(InputError):
            SpectralFactor(exact_poly([-1, 1]))

    def test_outer(self):
        """Outer means no roots in the open disk"""
        self.assertTrue(SpectralFactor(exact_poly([2, 1])).is_outer())
        self.assertFalse(SpectralFactor(exact_poly([1, 2])).is_outer())


class TestPhi(unittest.TestCase):

    def test_constant_factor(self):
        """phi of a constant"""
        Y = phi(exact_poly([1], degree=3))
        self.assertEqual(Y.y, (g(Fraction(1, 2)), g(0), g(0), g(0)))

    def test_linear_examples(self):
        """phi of two linear factors"""
        self.assertEqual(phi(exact_poly([1, Fraction(1, 2)])).y, (g(Fraction(5, 8)), g(Fraction(1, 2))))
        self.assertEqual(phi(exact_poly([2, g(1, 1)])).y, (g(3), g(2, 2)))

    def test_gram_lift_matches_lift_of_phi(self):
        """X X* equals the lift of phi(X)"""
        rng = make_rng(11)
        for n in range(1, 7):
            X = random_factor(rng, n)
            R = gram_lift(X)
            self.assertEqual(R, lift(phi(X)))
            self.assertTrue(R.is_self_inversive())

    def test_gram_lift_example(self):
        """X X* for 2 + (1+i) z"""
        self.assertEqual(gram_lift(exact_poly([2, g(1, 1)])), exact_poly([g(2, -2), 6, g(2, 2)]))

    def test_circle_identity(self):
        """|X(e^{it})|^2 = 2 T(t)"""
        X = ComplexPoly((1.5 + 0j, -0.3 + 0.8j, 0.25 - 0.1j, 0.6j))
        Y = phi(X)
        t = np.linspace(0.0, 2 * np.pi, 64, endpoint=False)
        values = eval_T(Y, t)
        for tk, T in zip(t, values):
            modulus = abs(X(cmath.exp(1j * tk))) ** 2
            self.assertLess(abs(modulus - 2 * T), 1e-10 * max(1.0, modulus))


class TestJacobian(unittest.TestCase):

    def test_rows_for_n_one(self):
        """Jacobian rows for n = 1"""
        rows = jacobian_rows(exact_poly([2, g(1, 1)]))
        self.assertEqual(rows, [[g(1, -1), g(4), g(1, 1)], [g(0), g(1, -1), g(2)], [g(2), g(1, 1), g(0)]])

    def test_row_count(self):
        """2n + 1 rows"""
        for n in range(1, 5):
            self.assertEqual(len(jacobian_rows(exact_poly([1], degree=n))), 2 * n + 1)

    def test_jacobian_identity_example(self):
        """det J = +-2 x_0 V for 2 + (1+i) z"""
        check = verify_lemma1(exact_poly([2, g(1, 1)]))
        self.assertEqual(check.closed_form, 8)
        self.assertIn(check.det, (8, -8))
        self.assertTrue(check.holds)

    def test_jacobian_identity_degenerate(self):
        """det J vanishes with V"""
        check = verify_lemma1(exact_poly([1, 1]))
        self.assertTrue(check.degenerate)
        self.assertEqual(check.det, 0)

    def test_jacobian_ratio_constant_per_n(self):
        """One sign ratio per degree"""
        rng = make_rng(3)
        for n in range(1, 4):
            ratios = set()
            for _ in range(8):
                check = verify_lemma1(random_factor(rng, n))
                if not check.degenerate:
                    self.assertTrue(check.holds)
                    ratios.add(check.ratio)
            self.assertEqual(len(ratios), 1)

    def test_jacobian_identity_needs_exact(self):
        """The identity check refuses floats"""
        with self.assertRaises(InputError):
            verify_lemma1(ComplexPoly((2.0 + 0j, 1.0 + 0j)))

    def test_det_vanishes_with_v(self):
        """Circle roots kill det J"""
        X = exact_poly([2, 0, g(2, 0)])  # roots +-i, on the circle
        self.assertEqual(mobius_discriminant(X), 0)
        self.assertEqual(jacobian_det(X), 0)

    def test_rank(self):
        """Numerical rank drops with V"""
        self.assertEqual(jacobian_rank(exact_poly([2, g(1, 1)])), 3)
        self.assertLess(jacobian_rank(exact_poly([1, 1])), 3)

    def test_rank_tolerance_from_settings(self):
        """jacobian_rank reads rank_tol when no tolerance is given"""
        X = exact_poly([2, g(1, 1)])
        with mock.patch.dict(os.environ, {"TRIGCONE_RANK_TOL": "1"}):
            get_settings.cache_clear()
            try:
                self.assertEqual(jacobian_rank(X), 0)
                self.assertEqual(jacobian_rank(X, rel_tol=1e-12), 3)
            finally:
                get_settings.cache_clear()


class TestDis2Identity(unittest.TestCase):

    def test_linear(self):
        """Dis2(phi(X)) = |Dis(X)|^2 V(X)^2 for n = 1"""
        check = verify_lemma2(exact_poly([2, g(1, 1)]))
        self.assertEqual(check.lhs, 4)
        self.assertTrue(check.holds)

    def test_double_root(self):
        """Both sides vanish at a double root"""
        check = verify_lemma2(exact_poly([4, -4, 1]))
        self.assertEqual(check.lhs, 0)
        self.assertTrue(check.holds)

    def test_random(self):
        """Random exact factors"""
        rng = make_rng(5)
        for n in range(1, 4):
            for _ in range(5):
                self.assertTrue(verify_lemma2(random_factor(rng, n)).holds)


class TestShadow(unittest.TestCase):

    def test_exact_example(self):
        """Shadow of (z - 2)^2 is (2z - 1)(z - 2)"""
        X = exact_poly([4, -4, 1])
        Q = lemma3_shadow(X, g(2))
        self.assertEqual(Q, exact_poly([2, -5, 2]))
        self.assertEqual(gram_lift(Q), gram_lift(X))
        self.assertEqual(mobius_discriminant(Q), 0)
        self.assertEqual(phi(Q), phi(X))

    def test_float_pipeline(self):
        """Float shadow keeps phi and q_0 > 0"""
        X = ComplexPoly.from_roots([2.0 + 0j, 2.0 + 0j, -3.0 + 0j], leading=1.0 + 0j)  # x0 = 12
        Q = lemma3_shadow(X, 2.0)
        self.assertLess(shadow_residual(X, Q), 1e-9)
        q0 = complex(Q.coeffs[0])
        self.assertGreater(q0.real, 0)
        self.assertLess(abs(q0 - 6.0), 1e-7)
        self.assertTrue(phi(Q).close_to(phi(X), 1e-9))

    def test_irrational_modulus_goes_through_floats(self):
        """An irrational |r| falls back to floats"""
        r = g(1, 1)
        X = ComplexPoly.from_roots([r, r], leading=g(1))
        X = X.conjugate().coeffs[0] * X
        Q = lemma3_shadow(X, r)
        self.assertFalse(Q.is_exact)
        self.assertLess(shadow_residual(X, Q), 1e-9)

    def test_simple_root_rejected(self):
        """The reflected root must be double"""
        with self.assertRaises(PreconditionError):
            lemma3_shadow(exact_poly([6, -5, 1]), g(2))
        with self.assertRaises(PreconditionError):
            lemma3_shadow(ComplexPoly((6.0 + 0j, -5.0 + 0j, 1.0 + 0j)), 2.0)

    def test_zero_root_rejected(self):
        """A root at zero cannot be reflected"""
        with self.assertRaises(DomainError):
            lemma3_shadow(exact_poly([4, -4, 1]), 0)


if __name__ == '__main__':
    unittest.main()
