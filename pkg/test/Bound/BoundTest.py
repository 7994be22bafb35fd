import math
import unittest
from ..BaseTestCase import BaseTestCase
from bacbound.Entropy import hInv
from bacbound.Optimizer import OptimizerConfig
from bacbound.Bound import Bound, BoundNotRegisteredError, BoundDomainError
from bacbound.Bound import RatePoint, RateTriple, simpleBound, weldonBound, weldonNonsystematicBound

class BoundTest(BaseTestCase):
    """Test for the bound registry and the closed form bounds."""

    def testRegistration(self):
        """
        Test that the bounds are registered.
        """
        for name in ('simple', 'weldon', 'weldonNonsystematic', 'ul', 'main'):
            self.assertIn(name, Bound.registeredNames())

        bound = Bound.create('simple', OptimizerConfig(gridPoints=128))
        self.assertEqual(bound.name(), 'simple')
        self.assertEqual(bound.config().gridPoints(), 128)
        self.assertRaises(BoundNotRegisteredError, Bound.create, 'badBound')

    def testSimpleBound(self):
        """
        Test the simple bound 3/2 - R1 clamped to [0, 1].
        """
        self.assertAlmostEqual(simpleBound(1.0), 0.5, places=12)
        self.assertAlmostEqual(simpleBound(0.75), 0.75, places=12)
        self.assertEqual(simpleBound(0.2), 1.0)

    def testWeldonBounds(self):
        """
        Test the weldon bounds.
        """
        self.assertEqual(weldonBound(1.0), 0.0)
        self.assertAlmostEqual(weldonBound(0.5), 0.5 * math.log2(3.0), places=12)
        self.assertEqual(weldonBound(0.0), 1.0)
        self.assertAlmostEqual(weldonNonsystematicBound(1.0), 0.5 * math.log2(3.0), places=12)

    def testWeldonNonsystematicAboveSimple(self):
        """
        Test that the nonsystematic weldon sum never improves on 3/2.
        """
        bound = Bound.create('weldonNonsystematic')
        for index in range(101):
            r1 = index / 100.0
            self.assertGreater(bound.unclampedSum(r1), 1.5)
            self.assertAlmostEqual(
                bound.unclampedSum(r1),
                r1 + (1.0 - hInv(r1)) * math.log2(3.0),
                places=12
            )

    def testDomain(self):
        """
        Test that rates outside of [0, 1] are rejected.
        """
        bound = Bound.create('simple')
        self.assertRaises(BoundDomainError, bound.value, 1.5)
        self.assertRaises(BoundDomainError, bound.value, -0.1)
        self.assertAlmostEqual(bound.value(1.0 + 1e-13), 0.5, places=9)

    def testAdmits(self):
        """
        Test rate points against a bound.
        """
        bound = Bound.create('simple')
        self.assertTrue(bound.admits(RatePoint(1.0, 0.4)))
        self.assertTrue(bound.admits(RatePoint(1.0, 0.5)))
        self.assertFalse(bound.admits(RatePoint(1.0, 0.6)))
        self.assertAlmostEqual(bound.sumValue(0.5), 1.5, places=12)

    def testRatePoint(self):
        """
        Test the rate point validation.
        """
        point = RatePoint(0.25, 0.5)
        self.assertEqual(point.sum(), 0.75)
        self.assertEqual(point.toDict(), {'r1': 0.25, 'r2': 0.5})
        self.assertEqual(point, RatePoint(0.25, 0.5))
        self.assertRaises(BoundDomainError, RatePoint, 1.2, 0.0)
        self.assertRaises(BoundDomainError, RatePoint, 0.0, -0.5)

    def testRateTriple(self):
        """
        Test the rate triple built from cardinalities.
        """
        rates = RateTriple.fromCardinalities(3, 3, 1, 4)
        self.assertAlmostEqual(rates.r0(), math.log2(3.0) / 3.0, places=12)
        self.assertEqual(rates.r1(), 0.0)
        self.assertAlmostEqual(rates.r2(), 2.0 / 3.0, places=12)
        self.assertAlmostEqual(rates.sum(), math.log2(3.0) / 3.0 + 2.0 / 3.0, places=12)
        self.assertRaises(BoundDomainError, RateTriple, -1.0, 0.0, 0.0)
        self.assertRaises(BoundDomainError, RateTriple, 0.0, 1.5, 0.0)


if __name__ == "__main__":
    unittest.main()
