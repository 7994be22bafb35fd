import unittest
import numpy as np
from ..BaseTestCase import BaseTestCase
from bacbound.Family import Family, FamilyError, FamilyGroundMismatchError, FamilyDuplicateMemberError
from bacbound.Family import sumKey, isMultisetUnionFree, sComplementPairCount, systematicFamily, randomFamily, hammingBall

class FamilyProceduresTest(BaseTestCase):
    """Test for the operations on pairs of families."""

    def testSumKey(self):
        """
        Test that the key identifies the integer vector sum.
        """
        self.assertEqual(sumKey(3, 1), (1, 2))
        self.assertEqual(sumKey(1, 2), sumKey(2, 1))
        self.assertNotEqual(sumKey(3, 0), sumKey(1, 2))

    def testUnionFree(self):
        """
        Test known union-free and colliding pairs.
        """
        f1 = Family.fromSubsets(2, [[], [1, 2]])
        f2 = Family.fromSubsets(2, [[], [1], [2]])
        self.assertTrue(isMultisetUnionFree(f1, f2))
        self.assertTrue(isMultisetUnionFree(f2, f1))

        full = Family(1, [0, 1])
        self.assertFalse(isMultisetUnionFree(full, full))
        self.assertTrue(isMultisetUnionFree(Family(1, [0]), full))

    def testUnionFreeErrors(self):
        """
        Test the preconditions of the union-free check.
        """
        self.assertRaises(FamilyGroundMismatchError, isMultisetUnionFree, Family(2, [0]), Family(3, [0]))
        self.assertRaises(FamilyDuplicateMemberError, isMultisetUnionFree, Family(2, [1, 1]), Family(2, [0]))

    def testComplementPairs(self):
        """
        Test the count of pairs with complementary projections.
        """
        full = Family(1, [0, 1])
        self.assertEqual(sComplementPairCount(full, full, 1), 2)
        self.assertEqual(sComplementPairCount(full, full, 0), 4)

    def testSystematicFamily(self):
        """
        Test that a systematic family is shattered by its set.
        """
        rng = np.random.default_rng(0)
        family = systematicFamily(4, 5, rng)
        self.assertEqual(family.size(), 4)
        self.assertTrue(family.isKShattered(5, 1))

    def testRandomFamily(self):
        """
        Test the random families.
        """
        rng = np.random.default_rng(0)
        family = randomFamily(5, 10, rng)
        self.assertEqual(family.size(), 10)
        self.assertFalse(family.hasDuplicates())
        self.assertEqual(randomFamily(2, 10, rng).size(), 4)
        self.assertRaises(FamilyError, randomFamily, 30, 2, rng)

    def testHammingBall(self):
        """
        Test the size of the hamming balls.
        """
        self.assertEqual(hammingBall(4, 0), Family(4, [0]))
        self.assertEqual(hammingBall(4, 2).size(), 11)
        self.assertEqual(hammingBall(5, 5).size(), 32)


if __name__ == "__main__":
    unittest.main()
