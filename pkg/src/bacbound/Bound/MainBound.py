from .Bound import Bound
from ..Entropy import hInv
from .sumRateProcedures import checkRange, rSigmaFromProbability, gammaFromProbability

class MainBound(Bound):
    """
    Bound obtained by splitting the first family on a fraction alpha of its elements.

    R2 <= min_{0 <= alpha <= hInv(R1)} (1 - alpha) (rSigma(alpha / (1 - alpha), G) - G)

    where G = h((hInv(R1) - alpha) / (1 - alpha)). Since hInv(G) is the argument of
    h, the inner rSigma is evaluated from the probability directly.
    """

    def argmin(self, r1):
        """
        Return a tuple (alpha, value) with the minimizing alpha and the raw bound.
        """
        p = hInv(checkRange(r1, 0.0, 1.0, 'r1'))
        return self.optimizer().minimize(
            lambda alpha: self.term(p, alpha),
            0.0,
            p,
            gridPoints=self.config().outerGridPoints()
        )

    def term(self, p, alpha):
        """
        Return the quantity minimized over alpha for hInv(R1) = p.
        """
        alpha = min(max(float(alpha), 0.0), p)
        shrunk = max(p - alpha, 0.0) / (1.0 - alpha)
        g = gammaFromProbability(p, alpha)

        return (1.0 - alpha) * (
            rSigmaFromProbability(alpha / (1.0 - alpha), shrunk, self.optimizer()) - g
        )

    def _compute(self, r1):
        """
        Implement the main bound.
        """
        return self.argmin(r1)[1]


# registering bound
Bound.register(
    'main',
    MainBound
)
