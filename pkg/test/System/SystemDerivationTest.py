import unittest
from ..BaseTestCase import BaseTestCase
from bacbound.Family import Family, exhaustivePairSearch
from bacbound.System import SystemDerivation, SystemDerivationError, deriveSystem

class SystemDerivationTest(BaseTestCase):
    """Test for systems derived from union-free pairs."""

    def testSingleShatteredElement(self):
        """
        Test the derivation from the full family on two elements.
        """
        f1 = Family(2, range(4))
        f2 = Family(2, [0])
        system, rates = deriveSystem(f1, f2, 1, 1)
        self.assertEqual(system.n(), 1)
        self.assertEqual((system.m0(), system.m1(), system.m2()), (1, 1, 1))
        self.assertEqual(system.pairs(), [(Family(1, [0]), Family(1, [0]))])
        self.assertTrue(system.isValid())
        self.assertEqual(rates.sum(), 0.0)

    def testCells(self):
        """
        Test the trimmed partitions.
        """
        f1 = Family(2, range(4))
        f2 = Family(2, [0])
        derivation = SystemDerivation(f1, f2, 1, 1)
        firstCells, secondCells = derivation.cells()
        self.assertEqual(firstCells, {0: [0], 1: [1]})
        self.assertEqual(secondCells, {0: [0]})
        self.assertEqual(derivation.selectedExponent(secondCells), 0)
        self.assertEqual(derivation.selectedExponent({0: [0, 1], 1: [2], 2: [3, 5]}), 1)
        self.assertEqual(derivation.selectedExponent({0: [0, 1], 1: [2]}), 0)
        self.assertEqual(derivation.complementGround().n(), 1)

    def testOptimalPairs(self):
        """
        Test that systems derived from optimal pairs are valid.
        """
        for n in (1, 2, 3):
            result = exhaustivePairSearch(n)
            f1 = result.f1()
            mask, _ = f1.maxKShattered(1, sizeCap=n - 1)
            system, rates = deriveSystem(f1, result.f2(), mask, 1)
            self.assertTrue(system.isValid())
            self.assertLessEqual(rates.sum(), 1.585)

    def testErrors(self):
        """
        Test the derivation preconditions.
        """
        full = Family(2, range(4))
        self.assertRaises(SystemDerivationError, SystemDerivation, full, Family(2, [0]), 3, 1)
        self.assertRaises(SystemDerivationError, SystemDerivation, full, Family(2, [0, 1]), 1, 1)
        self.assertRaises(SystemDerivationError, SystemDerivation, Family(2, [0]), Family(2, [0]), 1, 1)


if __name__ == "__main__":
    unittest.main()
