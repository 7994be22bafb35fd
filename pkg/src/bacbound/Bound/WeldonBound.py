import math
from .Bound import Bound

class WeldonBound(Bound):
    """
    Bound for systematic codes, R2 <= (1 - R1) log 3.
    """

    def _compute(self, r1):
        """
        Implement the weldon bound.
        """
        return (1.0 - r1) * math.log2(3.0)


# registering bound
Bound.register(
    'weldon',
    WeldonBound
)
