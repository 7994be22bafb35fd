from ..BacBoundError import BacBoundError

class BoundError(BacBoundError):
    """Bound error."""

class BoundDomainError(BoundError):
    """Bound domain error."""

class RatePoint(object):
    """
    Rate pair (R1, R2) in bits per element, both coordinates in [0, 1].
    """

    __slack = 1e-12

    def __init__(self, r1, r2):
        """
        Create a rate point.
        """
        self.__r1 = self.__checked(r1, 'r1')
        self.__r2 = self.__checked(r2, 'r2')

    def r1(self):
        """
        Return the rate of the first family.
        """
        return self.__r1

    def r2(self):
        """
        Return the rate of the second family.
        """
        return self.__r2

    def sum(self):
        """
        Return R1 + R2.
        """
        return self.__r1 + self.__r2

    def toDict(self):
        """
        Return the point as a dictionary.
        """
        return {'r1': self.__r1, 'r2': self.__r2}

    def __eq__(self, other):
        """
        Compare two rate points.
        """
        return isinstance(other, RatePoint) and (self.r1(), self.r2()) == (other.r1(), other.r2())

    def __hash__(self):
        """
        Return the point hash.
        """
        return hash((self.__r1, self.__r2))

    def __repr__(self):
        """
        Return a string representation of the point.
        """
        return 'RatePoint(r1={:.6f}, r2={:.6f})'.format(self.__r1, self.__r2)

    @classmethod
    def __checked(cls, value, name):
        """
        Return the rate clamped to [0, 1], raising when it is out of range.
        """
        value = float(value)
        if not (-cls.__slack <= value <= 1.0 + cls.__slack):
            raise BoundDomainError(
                'Rate "{}" must be in [0, 1], got {}'.format(name, value)
            )

        return min(max(value, 0.0), 1.0)
