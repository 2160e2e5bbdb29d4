import unittest
from fractions import Fraction

from trigcone.errors import InputError, MagnitudeError
from trigcone.scalar import (
    GaussRational,
    abs2,
    check_finite,
    conj,
    gauss_mul,
    is_exact,
    lift_scalar,
    magnitude,
    rational_sqrt,
    to_float,
)
from trigcone.verify import make_rng, random_gauss


class TestGaussRational(unittest.TestCase):

    def test_components_are_canonical(self):
        """Components are reduced fractions"""
        z = GaussRational(Fraction(2, 4), "-6/8")
        self.assertEqual(z.re, Fraction(1, 2))
        self.assertEqual(z.im, Fraction(-3, 4))
        self.assertEqual(z, GaussRational(Fraction(1, 2), Fraction(-3, 4)))

    def test_decimal_strings_are_exact(self):
        """"0.6" parses to 3/5"""
        self.assertEqual(GaussRational.parse("0.6"), GaussRational(Fraction(3, 5)))

    def test_floats_are_rejected(self):
        """Floats and bools are refused"""
        with self.assertRaises(InputError):
            GaussRational(0.5)
        with self.assertRaises(InputError):
            GaussRational(True)

    def test_field_operations(self):
        """Arithmetic on fixed values"""
        a = GaussRational(1, 2)
        b = GaussRational(3, -1)
        self.assertEqual(a + b, GaussRational(4, 1))
        self.assertEqual(a - b, GaussRational(-2, 3))
        self.assertEqual(a * b, GaussRational(5, 5))
        self.assertEqual((a * b) / b, a)
        self.assertEqual(1 - a, GaussRational(0, -2))
        self.assertEqual(2 * a, GaussRational(2, 4))
        self.assertEqual(a ** 2, a * a)
        self.assertEqual(a ** -1 * a, GaussRational(1))

    def test_random_field_axioms(self):
        """Field axioms and conjugation on random values"""
        rng = make_rng(2024)
        one, zero = GaussRational(1), GaussRational(0)
        for _ in range(200):
            a, b, c = random_gauss(rng), random_gauss(rng), random_gauss(rng, nonzero=True)
            self.assertEqual(a + b, b + a)
            self.assertEqual(a * b, b * a)
            self.assertEqual((a + b) + c, a + (b + c))
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual(a * (b + c), a * b + a * c)
            self.assertEqual(a + zero, a)
            self.assertEqual(a * one, a)
            self.assertEqual(a + (-a), zero)
            self.assertEqual(c * c.inverse(), one)
            self.assertEqual((a * c).conjugate(), a.conjugate() * c.conjugate())
            self.assertEqual(conj(a * b), conj(a) * conj(b))

    def test_division_by_zero(self):
        """Division by zero raises"""
        with self.assertRaises(ZeroDivisionError):
            GaussRational(1) / GaussRational(0)

    def test_conjugate_and_norm(self):
        """Conjugate and squared modulus"""
        z = GaussRational(3, 4)
        self.assertEqual(z.conjugate(), GaussRational(3, -4))
        self.assertEqual(z.abs2(), 25)
        self.assertEqual(z * z.conjugate(), GaussRational(25))

    def test_equality_with_rationals(self):
        """Real values compare and hash like Fractions"""
        self.assertEqual(GaussRational(Fraction(1, 2)), Fraction(1, 2))
        self.assertNotEqual(GaussRational(1, 1), 1)
        self.assertEqual(hash(GaussRational(7)), hash(Fraction(7)))

    def test_immutable(self):
        """Values are immutable"""
        z = GaussRational(1)
        with self.assertRaises(AttributeError):
            z._re = Fraction(2)

    def test_mixing_with_floats_is_refused(self):
        """No silent mixing with floats"""
        with self.assertRaises(TypeError):
            GaussRational(1) + 0.5

    def test_str_and_json(self):
        """String and JSON forms"""
        self.assertEqual(str(GaussRational(Fraction(1, 2), -1)), "1/2-1i")
        self.assertEqual(GaussRational(2, Fraction(1, 3)).to_json(), {"re": "2", "im": "1/3"})


class TestScalarHelpers(unittest.TestCase):

    def test_gauss_mul(self):
        """Explicit product formula"""
        # (1 + 2i)(3 - i) = 5 + 5i
        self.assertEqual(gauss_mul(GaussRational(1, 2), GaussRational(3, -1)), GaussRational(5, 5))
        self.assertEqual(gauss_mul(GaussRational(0, 1), GaussRational(0, 1)), GaussRational(-1))

    def test_to_float_rounds(self):
        """Conversion to complex rounds each component"""
        self.assertEqual(to_float(GaussRational(Fraction(1, 4), -2)), complex(0.25, -2.0))

    def test_to_float_overflow(self):
        """Huge rationals raise MagnitudeError"""
        with self.assertRaises(MagnitudeError):
            to_float(GaussRational(10 ** 400))

    def test_check_finite(self):
        """Non-finite floats raise"""
        with self.assertRaises(MagnitudeError):
            check_finite(complex(float("nan"), 0.0))

    def test_lift_scalar_chooses_field(self):
        """lift_scalar picks the field from the mode"""
        self.assertIsInstance(lift_scalar(3, exact=True), GaussRational)
        self.assertIsInstance(lift_scalar(3, exact=False), complex)
        self.assertTrue(is_exact(Fraction(1, 3)))
        self.assertFalse(is_exact(1.0))
        self.assertFalse(is_exact(True))

    def test_abs2_and_magnitude(self):
        """Squared modulus and modulus for both fields"""
        self.assertEqual(abs2(GaussRational(1, 1)), Fraction(2))
        self.assertAlmostEqual(abs2(1 + 1j), 2.0)
        self.assertAlmostEqual(magnitude(GaussRational(3, 4)), 5.0)
        self.assertEqual(conj(1 + 2j), 1 - 2j)

    def test_rational_sqrt(self):
        """Square roots of perfect-square rationals"""
        self.assertEqual(rational_sqrt(Fraction(25, 4)), Fraction(5, 2))
        self.assertIsNone(rational_sqrt(Fraction(2)))
        self.assertIsNone(rational_sqrt(Fraction(-4)))


if __name__ == '__main__':
    unittest.main()
