import math
import numpy as np
from .Suite import Suite
from ..Entropy import star
from ..Bound import Bound, attainedBranch, lowerBranch, rSigma

class BoundsSuite(Suite):
    """
    Checks of the sum-rate functions and of the ordering of the bounds.
    """

    r0Grid = (0.0, 0.1, 0.3, 0.6, 1.0, 2.0)
    r1Grid = (0.0, 0.25, 0.5, 0.75, 1.0)

    def __init__(self, *args, **kwargs):
        """
        Create a bounds suite.
        """
        super(BoundsSuite, self).__init__(*args, **kwargs)
        self.__sumRateValues = None

    def checks(self):
        """
        Implement the bound checks.
        """
        return [
            self.continuity,
            self.sumRateRange,
            self.sumRateMonotonicity,
            self.sumRateAtZero,
            self.weldonNonsystematic,
            self.ordering,
            self.mainAtOne
        ]

    def continuity(self):
        """
        Both branches of J agree at eta = p * p.
        """
        violations = []
        for p in np.linspace(0.0, 0.5, 100)[:-1]:
            threshold = star(float(p), float(p))
            violations.append(abs(attainedBranch(threshold) - lowerBranch(float(p), threshold)))

        return self.result('bounds.jContinuity', violations, 1e-9)

    def sumRateRange(self):
        """
        3/2 <= rSigma(r0, r1) <= log 3.
        """
        violations = []
        for value in self.__sumRateGrid().values():
            violations.append(max(1.5 - 1e-6 - value, value - math.log2(3.0) - 1e-9))

        return self.result('bounds.sumRateRange', violations)

    def sumRateMonotonicity(self):
        """
        rSigma is non-decreasing in r0 and non-increasing in r1.
        """
        values = self.__sumRateGrid()
        violations = []
        for (r0, r1), value in values.items():
            nextR0 = self.__next(self.r0Grid, r0)
            if nextR0 is not None:
                violations.append(value - values[(nextR0, r1)])

            nextR1 = self.__next(self.r1Grid, r1)
            if nextR1 is not None:
                violations.append(values[(r0, nextR1)] - value)

        return self.result('bounds.sumRateMonotonicity', violations, 1e-6)

    def sumRateAtZero(self):
        """
        rSigma(0, r1) = 3/2.
        """
        values = self.__sumRateGrid()
        return self.result(
            'bounds.sumRateAtZero',
            (abs(values[(0.0, r1)] - 1.5) for r1 in self.r1Grid),
            1e-5
        )

    def weldonNonsystematic(self):
        """
        R1 + (1 - hInv(R1)) log 3 > 3/2, so the nonsystematic bound is trivial.
        """
        bound = Bound.create('weldonNonsystematic', self.config())
        return self.result(
            'bounds.weldonNonsystematicTrivial',
            (1.5 - bound.unclampedSum(float(r1)) for r1 in np.linspace(0.0, 1.0, 101))
        )

    def ordering(self):
        """
        main <= ul <= simple on 101 points of R1 in [0.9, 1] (scaled, both ends always
        included).
        """
        simple = Bound.create('simple', self.config())
        ul = Bound.create('ul', self.config())
        main = Bound.create('main', self.config())

        violations = []
        for r1 in np.linspace(0.9, 1.0, max(self.samples(101), 2)):
            r1 = float(r1)
            ulValue = ul.value(r1)
            violations.append(main.value(r1) - ulValue)
            violations.append(ulValue - simple.value(r1))

        return self.result('bounds.ordering', violations, 1e-6)

    def mainAtOne(self):
        """
        1/4 <= main(1) and 1 + main(1) >= 1.31781 (the known admissible points).
        """
        value = Bound.create('main', self.config()).value(1.0)
        return self.result(
            'bounds.mainAtOne',
            [0.25 - value, 1.31781 - 1.0 - value]
        )

    def __sumRateGrid(self):
        """
        Return a dictionary (r0, r1) -> rSigma(r0, r1), computed once.
        """
        if self.__sumRateValues is None:
            self.__sumRateValues = {
                (r0, r1): rSigma(r0, r1, self.config())
                for r0 in self.r0Grid
                for r1 in self.r1Grid
            }

        return self.__sumRateValues

    @classmethod
    def __next(cls, grid, value):
        """
        Return the grid value following the input one (None for the last).
        """
        index = grid.index(value)
        return grid[index + 1] if index + 1 < len(grid) else None


# registering suite
Suite.register(
    'bounds',
    BoundsSuite
)
