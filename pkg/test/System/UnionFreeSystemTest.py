import os
import math
import unittest
from ..BaseTestCase import BaseTestCase
from bacbound.Family import Family
from bacbound.System import UnionFreeSystem, UnionFreeSystemError, UnionFreeSystemInvariantError, SystemConstructionError

class UnionFreeSystemTest(BaseTestCase):
    """Test for multiset-union-free systems."""

    __systemsDirectory = os.path.join(BaseTestCase.dataTestsDirectory(), 'systems')

    def testLog3Construction(self):
        """
        Test the cardinalities and rates of the log 3 construction.
        """
        system = UnionFreeSystem.log3Construction(3)
        self.assertEqual((system.m0(), system.m1(), system.m2()), (3, 1, 4))
        self.assertTrue(system.isValid())
        self.assertEqual(len(system.sumVectors()), 12)

        rates = system.rates()
        self.assertAlmostEqual(rates.r0(), math.log2(3.0) / 3.0, places=12)
        self.assertEqual(rates.r1(), 0.0)
        self.assertAlmostEqual(rates.r2(), 2.0 / 3.0, places=12)

    def testLog3ConstructionGrowth(self):
        """
        Test that the sum rate of the construction increases toward log 3.
        """
        previous = 0.0
        for n in (3, 6, 9):
            system = UnionFreeSystem.log3Construction(n)
            self.assertEqual(system.m0(), math.comb(n, 2 * n // 3))
            self.assertTrue(system.isValid())
            self.assertGreater(system.rates().sum(), previous)
            self.assertLess(system.rates().sum(), math.log2(3.0))
            previous = system.rates().sum()

    def testLog3ConstructionErrors(self):
        """
        Test the sizes rejected by the construction.
        """
        for n in (0, 4, 18, True):
            self.assertRaises(SystemConstructionError, UnionFreeSystem.log3Construction, n)

    def testSharedSums(self):
        """
        Test that a sum shared by two pairs is reported with the offending pair.
        """
        pair = (Family(1, [0]), Family(1, [0]))
        system = UnionFreeSystem(1, [pair, pair])
        self.assertFalse(system.isValid())
        with self.assertRaises(UnionFreeSystemInvariantError) as context:
            system.check()

        self.assertEqual(context.exception.index(), 1)

    def testPairNotUnionFree(self):
        """
        Test that a colliding pair invalidates the system.
        """
        full = Family(1, [0, 1])
        system = UnionFreeSystem(1, [(full, full)])
        with self.assertRaises(UnionFreeSystemInvariantError) as context:
            system.check()

        self.assertEqual(context.exception.index(), 0)

    def testInvalidPairs(self):
        """
        Test the construction preconditions.
        """
        self.assertRaises(UnionFreeSystemError, UnionFreeSystem, 2, [])
        self.assertRaises(
            UnionFreeSystemInvariantError,
            UnionFreeSystem,
            2,
            [(Family(2, [0]), Family(2, [0])), (Family(2, [1, 2]), Family(2, [0]))]
        )
        self.assertRaises(
            UnionFreeSystemInvariantError,
            UnionFreeSystem,
            2,
            [(Family(3, [0]), Family(3, [0]))]
        )

    def testJson(self):
        """
        Test the json serialization.
        """
        system = UnionFreeSystem.log3Construction(3)
        loaded = UnionFreeSystem.fromJson(system.toJson())
        self.assertEqual(loaded.pairs(), system.pairs())
        self.assertEqual(loaded.toDict(), system.toDict())

        self.assertRaises(UnionFreeSystemError, UnionFreeSystem.fromJson, '{"n": 2}')
        self.assertRaises(UnionFreeSystemError, UnionFreeSystem.fromJson, 'not json')
        self.assertRaises(
            UnionFreeSystemError,
            UnionFreeSystem.fromJson,
            '{"n": 1, "m0": 2, "pairs": [["n=1\\n-\\n", "n=1\\n-\\n"]]}'
        )

    def testJsonFiles(self):
        """
        Test loading systems from disk.
        """
        with open(os.path.join(self.__systemsDirectory, 'log3n3.json')) as f:
            system = UnionFreeSystem.fromJson(f.read())

        self.assertEqual(system.pairs(), UnionFreeSystem.log3Construction(3).pairs())
        self.assertTrue(system.isValid())

        with open(os.path.join(self.__systemsDirectory, 'sharedSums.json')) as f:
            system = UnionFreeSystem.fromJson(f.read())

        self.assertFalse(system.isValid())


if __name__ == "__main__":
    unittest.main()
