import unittest
from ..BaseTestCase import BaseTestCase
from bacbound.Optimizer import OptimizerConfig
from bacbound.Bound import Bound, gStar, ulBound, simpleBound, BoundDomainError

class UrbankeLiBoundTest(BaseTestCase):
    """Test for the urbanke-li bound."""

    __config = OptimizerConfig(**BaseTestCase.lightOptimizerSettings())

    def testGStar(self):
        """
        Test the extreme values of gStar.
        """
        self.assertAlmostEqual(gStar(0.0, self.__config), 1.0, places=9)
        self.assertAlmostEqual(gStar(0.5, self.__config), 1.5, places=9)
        self.assertRaises(BoundDomainError, gStar, 0.7, self.__config)

    def testValueAtOne(self):
        """
        Test the known value of the urbanke-li bound at R1 = 1.
        """
        value = ulBound(1.0)
        self.assertGreaterEqual(value, 0.491)
        self.assertLessEqual(value, 0.4922)

    def testBelowSimple(self):
        """
        Test that the bound improves on the simple bound close to R1 = 1.
        """
        bound = Bound.create('ul', self.__config)
        for r1 in (0.9, 0.95):
            value = bound.value(r1)
            self.assertLessEqual(value, simpleBound(r1) + 1e-6)
            self.assertAlmostEqual(bound.sumValue(r1), r1 + value, places=12)

    def testRawSum(self):
        """
        Test that the value is the raw sum minus R1.
        """
        bound = Bound.create('ul', self.__config)
        self.assertAlmostEqual(bound.rawSum(0.95) - 0.95, bound.value(0.95), places=9)


if __name__ == "__main__":
    unittest.main()
