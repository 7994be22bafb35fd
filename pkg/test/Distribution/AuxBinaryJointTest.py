import math
import unittest
import numpy as np
from ..BaseTestCase import BaseTestCase
from bacbound.Bound import RateTriple
from bacbound.System import UnionFreeSystem
from bacbound.Distribution import AuxBinaryJoint, EntropyTriplet
from bacbound.Distribution import DistributionDomainError, DistributionInvalidJointError

class AuxBinaryJointTest(BaseTestCase):
    """Test for joint laws of an auxiliary variable and two bits."""

    def testOptDist(self):
        """
        Test the extremal distribution at both ends of the crossover range.
        """
        triplet = AuxBinaryJoint.optDist(0.5).entropyTriplet()
        self.assertTrue(triplet.isClose(EntropyTriplet(1.5, 1.5, 1.0)))

        triplet = AuxBinaryJoint.optDist(0.0).entropyTriplet()
        self.assertTrue(triplet.isClose(EntropyTriplet(1.0, 0.0, 0.0)))

        joint = AuxBinaryJoint.optDist(0.3)
        self.assertAlmostEqual(joint.crossoverProbability(), 0.3, places=12)
        self.assertAlmostEqual(joint.marginalX1(), 0.5, places=12)
        self.assertAlmostEqual(joint.marginalX2(), 0.5, places=12)
        self.assertRaises(DistributionDomainError, AuxBinaryJoint.optDist, 0.6)

    def testSumMasses(self):
        """
        Test the conditional law of the sum.
        """
        joint = AuxBinaryJoint([1.0], [0.5], [0.25])
        masses = joint.sumMasses()
        self.assertEqual(masses.shape, (3, 1))
        self.assertTrue(np.allclose(masses[:, 0], [0.375, 0.5, 0.125]))
        self.assertAlmostEqual(joint.crossoverProbability(), 0.5, places=12)

    def testInvalidJoint(self):
        """
        Test the validation of the joint law.
        """
        self.assertRaises(DistributionInvalidJointError, AuxBinaryJoint, [0.5, 0.6], [0.1, 0.2], [0.1, 0.2])
        self.assertRaises(DistributionInvalidJointError, AuxBinaryJoint, [1.0], [0.1, 0.2], [0.1])
        self.assertRaises(DistributionInvalidJointError, AuxBinaryJoint, [1.0], [1.2], [0.1])
        self.assertRaises(DistributionInvalidJointError, AuxBinaryJoint, [], [], [])

    def testSymmetrize(self):
        """
        Test that symmetrization keeps the conditional entropies and makes X1 uniform.
        """
        joint = AuxBinaryJoint([0.2, 0.8], [0.1, 0.7], [0.3, 0.4])
        symmetric = joint.symmetrize()
        before = joint.entropyTriplet()
        after = symmetric.entropyTriplet()

        self.assertEqual(symmetric.supportSize(), 4)
        self.assertAlmostEqual(symmetric.marginalX1(), 0.5, places=12)
        self.assertAlmostEqual(after.hsCond(), before.hsCond(), places=12)
        self.assertAlmostEqual(after.h1Cond(), before.h1Cond(), places=12)
        self.assertGreaterEqual(after.hs(), before.hs() - 1e-12)
        self.assertAlmostEqual(symmetric.crossoverProbability(), joint.crossoverProbability(), places=12)

    def testFromSystem(self):
        """
        Test the distribution induced by the log 3 construction.
        """
        system = UnionFreeSystem.log3Construction(3)
        joint = AuxBinaryJoint.fromSystem(system)
        self.assertEqual(joint.supportSize(), 9)

        triplet = joint.entropyTriplet()
        self.assertAlmostEqual(triplet.hs(), math.log2(3.0), places=12)
        self.assertAlmostEqual(triplet.hsCond(), 2.0 / 3.0, places=12)
        self.assertEqual(triplet.h1Cond(), 0.0)
        self.assertTrue(triplet.admits(system.rates()))

    def testRandom(self):
        """
        Test the random joints.
        """
        joint = AuxBinaryJoint.random(3, np.random.default_rng(0))
        self.assertEqual(joint.supportSize(), 3)
        self.assertAlmostEqual(float(joint.uMasses().sum()), 1.0, places=12)
        self.assertEqual(sorted(joint.toDict().keys()), ['q', 't', 'uMasses'])

    def testTriplet(self):
        """
        Test the entropy triplet validation and the region check.
        """
        triplet = EntropyTriplet(1.5, 1.0, 0.5)
        self.assertTrue(triplet.admits(RateTriple(0.0, 0.5, 0.5)))
        self.assertFalse(triplet.admits(RateTriple(0.0, 0.6, 0.3)))
        self.assertFalse(triplet.admits(RateTriple(0.6, 0.5, 0.5)))
        self.assertEqual(triplet.toDict(), {'hs': 1.5, 'hsCond': 1.0, 'h1Cond': 0.5})

        self.assertRaises(DistributionInvalidJointError, EntropyTriplet, -0.5, 0.0, 0.0)
        self.assertRaises(DistributionInvalidJointError, EntropyTriplet, 1.7, 0.0, 0.0)
        self.assertRaises(DistributionInvalidJointError, EntropyTriplet, 1.0, 1.2, 0.0)


if __name__ == "__main__":
    unittest.main()
