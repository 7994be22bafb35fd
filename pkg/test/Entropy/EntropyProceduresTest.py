import math
import unittest
import numpy as np
from ..BaseTestCase import BaseTestCase
from bacbound.Entropy import h, hInv, entropy, columnEntropy, star, clampProbability
from bacbound.Entropy import EntropyDomainError, EntropyInvalidPmfError

class EntropyProceduresTest(BaseTestCase):
    """Test for the entropy primitives."""

    def testBinaryEntropy(self):
        """
        Test known values of the binary entropy.
        """
        self.assertEqual(h(0.0), 0.0)
        self.assertEqual(h(1.0), 0.0)
        self.assertAlmostEqual(h(0.5), 1.0, places=12)
        self.assertAlmostEqual(h(1.0 / 3.0), math.log2(3.0) - 2.0 / 3.0, places=12)

    def testBinaryEntropySymmetry(self):
        """
        Test that h(p) = h(1 - p).
        """
        for p in np.linspace(0.0, 1.0, 101):
            self.assertAlmostEqual(h(float(p)), h(1.0 - float(p)), places=12)

    def testBinaryEntropyArray(self):
        """
        Test that arrays are evaluated element-wise.
        """
        values = h(np.array([0.0, 0.5, 1.0]))
        self.assertIsInstance(values, np.ndarray)
        self.assertTrue(np.allclose(values, [0.0, 1.0, 0.0]))
        self.assertIsInstance(h(0.25), float)

    def testDomain(self):
        """
        Test the float slack and the domain errors.
        """
        self.assertEqual(h(1.0 + 1e-13), 0.0)
        self.assertEqual(clampProbability(-1e-13), 0.0)
        self.assertRaises(EntropyDomainError, h, -0.1)
        self.assertRaises(EntropyDomainError, h, np.array([0.2, 1.5]))
        self.assertRaises(EntropyDomainError, hInv, 1.1)

    def testInverse(self):
        """
        Test that hInv inverts h over [0, 1/2].
        """
        self.assertEqual(hInv(0.0), 0.0)
        self.assertEqual(hInv(1.0), 0.5)
        self.assertAlmostEqual(hInv(0.5), 0.110028, places=6)
        for p in np.linspace(0.0, 0.5, 51):
            self.assertAlmostEqual(hInv(h(float(p))), float(p), places=9)

    def testEntropy(self):
        """
        Test the entropy of a pmf.
        """
        self.assertAlmostEqual(entropy([0.5, 0.5]), 1.0, places=12)
        self.assertAlmostEqual(entropy([1.0 / 3.0] * 3), math.log2(3.0), places=12)
        self.assertEqual(entropy([1.0, 0.0]), 0.0)

    def testInvalidPmf(self):
        """
        Test that invalid pmfs are rejected.
        """
        self.assertRaises(EntropyInvalidPmfError, entropy, [0.5, 0.6])
        self.assertRaises(EntropyInvalidPmfError, entropy, [1.5, -0.5])
        self.assertRaises(EntropyInvalidPmfError, entropy, [])

    def testConvolution(self):
        """
        Test the binary convolution.
        """
        self.assertAlmostEqual(star(0.1, 0.2), 0.26, places=12)
        self.assertAlmostEqual(star(0.1, 0.2), star(0.2, 0.1), places=12)
        self.assertAlmostEqual(star(0.3, 0.5), 0.5, places=12)
        self.assertEqual(star(0.0, 0.0), 0.0)

    def testGroupingRule(self):
        """
        Test H(p0, p1, p2) = h(p0) + (1 - p0) h(p1 / (1 - p0)).
        """
        for p0, p1, p2 in ((0.5, 0.25, 0.25), (0.2, 0.7, 0.1), (0.0, 0.3, 0.7), (0.6, 0.4, 0.0)):
            self.assertAlmostEqual(
                entropy([p0, p1, p2]),
                h(p0) + (1.0 - p0) * h(p1 / (1.0 - p0)),
                places=12
            )

        # the conditional term vanishes when p0 = 1
        self.assertEqual(entropy([1.0, 0.0, 0.0]), h(1.0))

    def testGroupingBound(self):
        """
        Test H(p0, p1, p2) <= h(p0) + 1 - p0 with equality when p1 = p2.
        """
        for p0 in np.linspace(0.0, 1.0, 11):
            p0 = float(p0)
            rest = 1.0 - p0
            self.assertAlmostEqual(entropy([p0, rest / 2.0, rest / 2.0]), h(p0) + rest, places=9)

            if rest > 0.05:
                self.assertLess(entropy([p0, 0.2 * rest, 0.8 * rest]), h(p0) + rest - 1e-9)

    def testConvolutionAssociativity(self):
        """
        Test that the binary convolution is associative.
        """
        self.assertEqual(star(star(0.25, 0.125), 0.375), star(0.25, star(0.125, 0.375)))
        for p, q, r in np.random.default_rng(0).uniform(0.0, 1.0, (200, 3)):
            self.assertAlmostEqual(star(star(p, q), r), star(p, star(q, r)), delta=1e-15)

    def testColumnEntropy(self):
        """
        Test the entropy of every column of a matrix.
        """
        values = columnEntropy(np.array([[0.5, 1.0], [0.5, 0.0]]))
        self.assertTrue(np.allclose(values, [1.0, 0.0]))
        self.assertAlmostEqual(columnEntropy([0.25, 0.25, 0.5]), 1.5, places=12)


if __name__ == "__main__":
    unittest.main()
