import math
import numpy as np
from .OptimizerConfig import OptimizerConfig, OptimizerError

class ScalarOptimizerEvaluationError(OptimizerError):
    """Scalar optimizer evaluation error."""

    def __init__(self, message, argument):
        """
        Create the error carrying the argument that produced the invalid value.
        """
        super(ScalarOptimizerEvaluationError, self).__init__(message)
        self.__argument = argument

    def argument(self):
        """
        Return the offending argument.
        """
        return self.__argument

class ScalarOptimizer(object):
    """
    Maximizes (or minimizes) a real function of one variable over an interval.

    The function is sampled on a dense uniform grid, then a golden-section
    search is run inside the grid cells surrounding the best three samples.
    The result is deterministic for a given config.

    When vectorized is enabled the function receives the whole grid as a numpy
    array during the sampling phase (it must still accept python floats, which
    are used during the refinement).
    """

    __candidates = 3
    __invGoldenRatio = (math.sqrt(5.0) - 1.0) / 2.0

    def __init__(self, config=None):
        """
        Create a scalar optimizer.
        """
        if config is None:
            config = OptimizerConfig()

        assert isinstance(config, OptimizerConfig), "Invalid config type!"
        self.__config = config

    def config(self):
        """
        Return the optimizer config.
        """
        return self.__config

    def maximize(self, func, lo, hi, vectorized=False, gridPoints=None):
        """
        Return a tuple (argument, value) of the maximum of func over [lo, hi].
        """
        lo = float(lo)
        hi = float(hi)
        if lo > hi:
            raise OptimizerError(
                'Invalid interval [{}, {}]'.format(lo, hi)
            )

        if lo == hi:
            return (lo, self.__evaluate(func, lo))

        if gridPoints is None:
            gridPoints = self.__config.gridPoints()

        grid = np.linspace(lo, hi, gridPoints)
        if vectorized:
            values = np.asarray(func(grid), dtype=float)
            if values.shape != grid.shape:
                values = np.broadcast_to(values, grid.shape).astype(float)
            self.__checkFinite(grid, values)
        else:
            values = np.array([self.__evaluate(func, float(x)) for x in grid])

        order = np.argsort(-values, kind='stable')
        bestIndex = int(order[0])
        bestArgument = float(grid[bestIndex])
        bestValue = float(values[bestIndex])

        for index in order[:self.__candidates]:
            index = int(index)
            argument, value = self.__goldenSection(
                func,
                float(grid[max(index - 1, 0)]),
                float(grid[min(index + 1, gridPoints - 1)])
            )

            if value > bestValue:
                bestArgument = argument
                bestValue = value

        return (bestArgument, bestValue)

    def minimize(self, func, lo, hi, vectorized=False, gridPoints=None):
        """
        Return a tuple (argument, value) of the minimum of func over [lo, hi].
        """
        argument, value = self.maximize(
            lambda x: -func(x),
            lo,
            hi,
            vectorized=vectorized,
            gridPoints=gridPoints
        )

        return (argument, -value)

    def __goldenSection(self, func, a, b):
        """
        Return the best (argument, value) visited by a golden-section search over [a, b].
        """
        c = b - self.__invGoldenRatio * (b - a)
        d = a + self.__invGoldenRatio * (b - a)
        fc = self.__evaluate(func, c)
        fd = self.__evaluate(func, d)

        best = (c, fc) if fc >= fd else (d, fd)
        for _ in range(self.__config.refineIters()):
            if b - a <= self.__config.tol():
                break

            if fc >= fd:
                b = d
                d = c
                fd = fc
                c = b - self.__invGoldenRatio * (b - a)
                fc = self.__evaluate(func, c)
                if fc > best[1]:
                    best = (c, fc)
            else:
                a = c
                c = d
                fc = fd
                d = a + self.__invGoldenRatio * (b - a)
                fd = self.__evaluate(func, d)
                if fd > best[1]:
                    best = (d, fd)

        return best

    @classmethod
    def __evaluate(cls, func, x):
        """
        Evaluate the function at a single point making sure the value is finite.
        """
        value = float(func(x))
        if not math.isfinite(value):
            raise ScalarOptimizerEvaluationError(
                'Non-finite value "{}" at argument {}'.format(value, x),
                x
            )

        return value

    @classmethod
    def __checkFinite(cls, grid, values):
        """
        Raise an evaluation error for the first non-finite value of the grid.
        """
        invalid = np.flatnonzero(~np.isfinite(values))
        if invalid.size:
            argument = float(grid[invalid[0]])
            raise ScalarOptimizerEvaluationError(
                'Non-finite value "{}" at argument {}'.format(values[invalid[0]], argument),
                argument
            )

def scalarMaximize(func, lo, hi, config=None, vectorized=False):
    """
    Return (argument, value) maximizing func over [lo, hi].
    """
    return ScalarOptimizer(config).maximize(func, lo, hi, vectorized=vectorized)

def scalarMinimize(func, lo, hi, config=None, vectorized=False):
    """
    Return (argument, value) minimizing func over [lo, hi].
    """
    return ScalarOptimizer(config).minimize(func, lo, hi, vectorized=vectorized)
