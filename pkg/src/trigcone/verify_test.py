import unittest
from unittest import mock

from trigcone.errors import ConvergenceError, InputError
from trigcone.scalar import GaussRational
from trigcone.verify import (
    DEFAULT_SUITES,
    example1_dis2,
    example1_v,
    example2_dis2,
    example2_v,
    make_rng,
    random_factor,
    run_suites,
)


class TestSuites(unittest.TestCase):

    def test_default_suites_pass(self):
        """Default suites pass for small n"""
        for n in (1, 2, 3):
            names = [name for name in DEFAULT_SUITES if n >= 2 or name != "lemma3"]
            for result in run_suites(names, n=n, samples=6, seed=20240601):
                self.assertTrue(result.ok, f"{result.suite} n={n}: {result.failures}")
                self.assertEqual(result.passed, 6)

    def test_jacobian_sign_ratio_recorded(self):
        """The sign ratio is recorded"""
        (result,) = run_suites(["lemma1"], n=2, samples=8, seed=3)
        self.assertEqual(len(result.notes["ratios"]), 1)

    def test_float_oracle_and_shadow(self):
        """Float oracle and shadow suites pass"""
        for result in run_suites(["oracle", "lemma3"], n=4, samples=10, seed=99, mode="float"):
            self.assertTrue(result.ok, f"{result.suite}: {result.failures}")

    def test_examples_suite(self):
        """Closed forms have zero residual"""
        (result,) = run_suites(["examples"], n=3, samples=20, seed=1)
        self.assertTrue(result.ok)
        self.assertEqual(result.notes["max_residual"], "0")

    def test_reproducible(self):
        """Same seed, same report"""
        first = run_suites(["lemma2"], n=2, samples=5, seed=42)[0]
        second = run_suites(["lemma2"], n=2, samples=5, seed=42)[0]
        self.assertEqual(first.model_dump(), second.model_dump())
        a = random_factor(make_rng(42), 3)
        b = random_factor(make_rng(42), 3)
        self.assertEqual(a, b)

    def test_unknown_suite(self):
        """Unknown suite names are input errors"""
        with self.assertRaises(InputError):
            run_suites(["lemma4"], n=2, samples=1, seed=0)

    def test_exact_only_suites_reject_float(self):
        """Exact-only suites refuse float mode"""
        with self.assertRaises(InputError):
            run_suites(["lemma1"], n=2, samples=1, seed=0, mode="float")

    def test_shadow_needs_degree_two(self):
        """The shadow suite needs n >= 2"""
        with self.assertRaises(InputError):
            run_suites(["lemma3"], n=1, samples=1, seed=0)


class TestClosedForms(unittest.TestCase):

    def test_degree_one(self):
        """Degree one closed forms"""
        y0, y1 = GaussRational(3), GaussRational(2, 2)
        self.assertEqual(example1_dis2(y0, y1), 4)
        self.assertEqual(example1_v(GaussRational(2), GaussRational(1, 1)), 2)

    def test_degree_two_on_real_axis(self):
        """Degree two V with x_1 = 0"""
        # x_1 = 0: V = (x_0^2 - |x_2|^2)^2
        x0, x2 = GaussRational(3), GaussRational(1, 1)
        self.assertEqual(example2_v(x0, GaussRational(0), x2), (9 - 2) ** 2)

    def test_degree_two_dis2_without_middle_term(self):
        """Degree two Dis2 with y_1 = 0"""
        # y_1 = 0 leaves 256 |y_2|^2 (y_0^2 - |y_2|^2)^2; Y = 1 + cos 2t sits on the boundary
        self.assertEqual(example2_dis2(GaussRational(1), GaussRational(0), GaussRational(1)), 0)


class TestSampleSizes(unittest.TestCase):

    def assertSuitePasses(self, result, samples):
        self.assertTrue(result.ok, f"{result.suite} n={result.n}: {result.failures[:3]}")
        self.assertEqual(result.passed, samples)

    def test_jacobian_identity(self):
        """50 exact samples for each n from 1 to 5"""
        for n in range(1, 6):
            (result,) = run_suites(["lemma1"], n=n, samples=50, seed=101 + n)
            self.assertSuitePasses(result, 50)

    def test_dis2_identity(self):
        """25 exact samples for each n from 1 to 4"""
        for n in range(1, 5):
            (result,) = run_suites(["lemma2"], n=n, samples=25, seed=201 + n)
            self.assertSuitePasses(result, 25)

    def test_shadow(self):
        """20 planted double roots for each n from 2 to 5"""
        for n in range(2, 6):
            (result,) = run_suites(["lemma3"], n=n, samples=20, seed=301 + n)
            self.assertSuitePasses(result, 20)

    def test_forms(self):
        """20 homogeneity and reflection checks for each n from 1 to 4"""
        for n in range(1, 5):
            (result,) = run_suites(["forms"], n=n, samples=20, seed=401 + n)
            self.assertSuitePasses(result, 20)

    def test_float_oracle(self):
        """100 float pairs of degree up to 8"""
        (result,) = run_suites(["oracle"], n=8, samples=100, seed=501, mode="float")
        self.assertSuitePasses(result, 100)

    def test_exact_oracle(self):
        """50 exact pairs built from rational roots"""
        (result,) = run_suites(["oracle"], n=4, samples=50, seed=502)
        self.assertSuitePasses(result, 50)

    def test_closed_forms(self):
        """100 samples of the degree one and two closed forms"""
        (result,) = run_suites(["examples"], n=2, samples=100, seed=601)
        self.assertSuitePasses(result, 100)
        self.assertEqual(result.notes["max_residual"], "0")


class TestErrorPropagation(unittest.TestCase):

    def test_numeric_error_is_not_a_mismatch(self):
        """A failed computation propagates instead of being recorded as a mismatch"""
        with mock.patch("trigcone.verify.lemma3_shadow", side_effect=ConvergenceError("no convergence")):
            with self.assertRaises(ConvergenceError):
                run_suites(["lemma2", "lemma3"], n=2, samples=3, seed=0)


if __name__ == '__main__':
    unittest.main()
