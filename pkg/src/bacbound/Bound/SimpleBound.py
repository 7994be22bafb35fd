from .Bound import Bound

class SimpleBound(Bound):
    """
    Trivial bound R1 + R2 <= 3/2.
    """

    def _compute(self, r1):
        """
        Implement the simple bound.
        """
        return 1.5 - r1


# registering bound
Bound.register(
    'simple',
    SimpleBound
)
