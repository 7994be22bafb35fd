import math
from .Bound import Bound
from ..Entropy import hInv

class WeldonNonsystematicBound(Bound):
    """
    Weldon argument extended to arbitrary codes, R2 <= (1 - hInv(R1)) log 3.

    The unclamped value always exceeds 3/2 - R1, so the bound never improves on
    the simple one. It is kept for comparison.
    """

    def _compute(self, r1):
        """
        Implement the nonsystematic weldon bound.
        """
        return (1.0 - hInv(r1)) * math.log2(3.0)

    def unclampedSum(self, r1):
        """
        Return R1 plus the unclamped bound.
        """
        return float(r1) + self._compute(float(r1))


# registering bound
Bound.register(
    'weldonNonsystematic',
    WeldonNonsystematicBound
)
