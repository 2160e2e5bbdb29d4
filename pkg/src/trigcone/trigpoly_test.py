import unittest
from fractions import Fraction

from trigcone.errors import InputError
from trigcone.poly import exact_poly
from trigcone.scalar import GaussRational
from trigcone.trigpoly import TrigPoly


class TestTrigPoly(unittest.TestCase):

    def test_needs_degree_one(self):
        """Degree zero is refused"""
        with self.assertRaises(InputError):
            TrigPoly((GaussRational(1),))

    def test_y0_must_be_real(self):
        """y_0 must be real"""
        with self.assertRaises(InputError):
            TrigPoly((GaussRational(1, 1), GaussRational(0)))

    def test_padding(self):
        """from_values pads to n"""
        Y = TrigPoly.from_values([Fraction(1, 2)], exact=True, n=3)
        self.assertEqual(Y.n, 3)
        self.assertTrue(Y.is_exact)
        self.assertEqual(Y[3], 0)

    def test_lift_layout(self):
        """Lift coefficient layout"""
        Y = TrigPoly((GaussRational(3), GaussRational(2, 2)))
        self.assertEqual(Y.lift(), exact_poly([GaussRational(2, -2), 6, GaussRational(2, 2)]))
        self.assertTrue(Y.lift().is_self_inversive())

    def test_lift_degree_two(self):
        """Lift for n = 2"""
        Y = TrigPoly((GaussRational(1), GaussRational(2, 1), GaussRational(0, 3)))
        self.assertEqual(
            Y.lift(),
            exact_poly([GaussRational(0, -3), GaussRational(2, -1), 2, GaussRational(2, 1), GaussRational(0, 3)]),
        )

    def test_real_form(self):
        """Conversion from cos and sin coefficients"""
        # 1 + 2 cos t + 3 sin t
        Y = TrigPoly.from_real([1, 2], [3])
        self.assertEqual(Y.y, (GaussRational(1), GaussRational(2, -3)))
        a, b = Y.real_coefficients()
        self.assertEqual(a, [1, 2])
        self.assertEqual(b, [3])

    def test_real_form_rejects_nonzero_b0(self):
        """b_0 must be zero"""
        with self.assertRaises(InputError):
            TrigPoly.from_real([1, 2], [1, 3])

    def test_scaling_by_real_factors(self):
        """Real scaling only"""
        Y = TrigPoly((GaussRational(1), GaussRational(1, 1)))
        self.assertEqual(Y * Fraction(1, 2), TrigPoly((GaussRational(Fraction(1, 2)), GaussRational(Fraction(1, 2), Fraction(1, 2)))))
        with self.assertRaises(InputError):
            Y * GaussRational(0, 1)

    def test_addition_pads(self):
        """Sums pad to the larger degree"""
        a = TrigPoly((GaussRational(1), GaussRational(1)))
        b = TrigPoly((GaussRational(1), GaussRational(0), GaussRational(2)))
        self.assertEqual((a + b).y, (GaussRational(2), GaussRational(1), GaussRational(2)))

    def test_float_conversion(self):
        """Float conversion"""
        Y = TrigPoly((GaussRational(Fraction(5, 8)), GaussRational(Fraction(1, 2))))
        self.assertTrue(Y.to_float().close_to(TrigPoly((0.625 + 0j, 0.5 + 0j))))
        self.assertEqual(Y.scale(), 0.625)


if __name__ == '__main__':
    unittest.main()
