import numpy as np
from .Bound import Bound
from ..Entropy import h, hInv, columnEntropy, isScalar
from .sumRateProcedures import checkRange

class UrbankeLiBound(Bound):
    """
    Bound on the sum rate from the Urbanke-Li argument.

    The expression

        min_{0 <= rho <= 1/2} max_{0 <= kappa <= 1} h(<1 - hInv(R1) - kappa>) - h(rho)
            + min{gStar(rho), <rho + kappa> + h(<rho + kappa>)}

    bounds R1 + R2, where <a> clamps a to [0, 1/2]. The value of the bound is the
    implied R2, the sum minus R1.
    """

    def gStar(self, rho):
        """
        Return max over beta of the entropy of ((1-rho)(1-beta), rho(1-beta) + (1-rho)beta, rho beta).
        """
        rho = checkRange(rho, 0.0, 0.5, 'rho')

        return self.optimizer().maximize(
            lambda beta: self.__ternaryEntropy(rho, beta),
            0.0,
            1.0,
            vectorized=True
        )[1]

    def rawSum(self, r1):
        """
        Return the min-max expression bounding R1 + R2.
        """
        p = hInv(checkRange(r1, 0.0, 1.0, 'r1'))
        optimizer = self.optimizer()

        def innerMax(rho):
            g = self.gStar(rho)
            entropyRho = h(rho)

            def objective(kappa):
                return h(self.__clampHalf(1.0 - p - kappa)) - entropyRho + np.minimum(
                    g,
                    self.__clampHalf(rho + kappa) + h(self.__clampHalf(rho + kappa))
                )

            return optimizer.maximize(objective, 0.0, 1.0, vectorized=True)[1]

        return optimizer.minimize(
            innerMax,
            0.0,
            0.5,
            gridPoints=self.config().outerGridPoints()
        )[1]

    def _compute(self, r1):
        """
        Implement the urbanke-li bound.
        """
        return self.rawSum(r1) - r1

    @classmethod
    def __clampHalf(cls, value):
        """
        Return the input clamped to [0, 1/2].
        """
        if isScalar(value):
            return min(max(float(value), 0.0), 0.5)
        return np.clip(value, 0.0, 0.5)

    @classmethod
    def __ternaryEntropy(cls, rho, beta):
        """
        Entropy of the ternary pmf used by gStar (element-wise over beta).
        """
        beta = np.clip(np.asarray(beta, dtype=float), 0.0, 1.0)
        return columnEntropy(np.stack((
            (1.0 - rho) * (1.0 - beta),
            rho * (1.0 - beta) + (1.0 - rho) * beta,
            rho * beta
        )))


# registering bound
Bound.register(
    'ul',
    UrbankeLiBound
)
