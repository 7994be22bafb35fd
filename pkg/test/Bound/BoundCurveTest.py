import os
import unittest
from ..BaseTestCase import BaseTestCase
from bacbound.Optimizer import OptimizerConfig
from bacbound.Bound import BoundCurve, BoundCurveError, curve

class BoundCurveTest(BaseTestCase):
    """Test for the bound curve."""

    __rows = [
        (0.9, 0.6, 0.55, 0.5),
        (1.0, 0.5, 0.49216, 0.4798)
    ]

    def testCsv(self):
        """
        Test the csv serialization.
        """
        contents = BoundCurve(self.__rows).toCsv()
        lines = contents.split('\n')
        self.assertEqual(lines[0], 'r1,simple,ul,main')
        self.assertEqual(lines[1], '0.900000,0.600000,0.550000,0.500000')
        self.assertEqual(lines[2], '1.000000,0.500000,0.492160,0.479800')
        self.assertEqual(BoundCurve.fromCsv(contents).rows(), self.__rows)

    def testCsvFullPrecision(self):
        """
        Test that rows with more digits than the csv keeps parse back exactly.
        """
        boundCurve = BoundCurve([(1.0, 0.5, 0.4921598804293368, 0.4798303077040895)])
        self.assertEqual(boundCurve.rows(), [(1.0, 0.5, 0.49216, 0.47983)])
        self.assertEqual(BoundCurve.fromCsv(boundCurve.toCsv()).rows(), boundCurve.rows())

    def testCsvFile(self):
        """
        Test that a curve written to disk reproduces the same rows.
        """
        filePath = os.path.join(self.tempDirectory(), 'curve.csv')
        with open(filePath, 'w') as f:
            f.write(BoundCurve(self.__rows).toCsv())

        with open(filePath) as f:
            self.assertEqual(BoundCurve.fromCsv(f.read()).rows(), self.__rows)

    def testColumns(self):
        """
        Test the access to the columns.
        """
        boundCurve = BoundCurve(self.__rows)
        self.assertEqual(boundCurve.column('r1'), [0.9, 1.0])
        self.assertEqual(boundCurve.column('main'), [0.5, 0.4798])
        self.assertEqual(boundCurve.toDict()[1]['ul'], 0.49216)
        self.assertRaises(BoundCurveError, boundCurve.column, 'weldon')

    def testInvalidRows(self):
        """
        Test the row validation.
        """
        self.assertRaises(BoundCurveError, BoundCurve, [(0.9, 0.6, 0.5)])
        self.assertRaises(BoundCurveError, BoundCurve, [(0.9, -0.6, 0.5, 0.5)])
        self.assertRaises(BoundCurveError, BoundCurve, list(reversed(self.__rows)))
        self.assertRaises(BoundCurveError, BoundCurve.fromCsv, 'r1,main\n0.9,0.5\n')
        self.assertRaises(BoundCurveError, BoundCurve.fromCsv, 'r1,simple,ul,main\n0.9,a,b,c\n')

    def testCompute(self):
        """
        Test the evaluation of the curve close to R1 = 1.
        """
        config = OptimizerConfig(**self.lightOptimizerSettings())
        boundCurve = curve(0.95, 1.0, 2, config)
        self.assertEqual(boundCurve.column('r1'), [0.95, 1.0])
        for _, simple, ul, main in boundCurve.rows():
            self.assertLessEqual(main, ul + 1e-6)
            self.assertLessEqual(ul, simple + 1e-6)

        self.assertEqual(BoundCurve.fromCsv(boundCurve.toCsv()).rows(), boundCurve.rows())

        self.assertRaises(BoundCurveError, BoundCurve.compute, 1.0, 0.9, 3, config)
        self.assertRaises(BoundCurveError, BoundCurve.compute, 0.9, 1.0, 1, config)
        self.assertRaises(BoundCurveError, BoundCurve.compute, -0.1, 1.0, 3, config)


if __name__ == "__main__":
    unittest.main()
