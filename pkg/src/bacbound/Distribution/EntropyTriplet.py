import math
from ..BacBoundError import BacBoundError

class DistributionError(BacBoundError):
    """Distribution error."""

class DistributionInvalidJointError(DistributionError):
    """Distribution invalid joint error."""

class EntropyTriplet(object):
    """
    Entropies (H(X1 + X2), H(X1 + X2 | U), H(X1 | U)) in bits.
    """

    __slack = 1e-12

    def __init__(self, hs, hsCond, h1Cond):
        """
        Create an entropy triplet.
        """
        hs = float(hs)
        hsCond = float(hsCond)
        h1Cond = float(h1Cond)

        cap = math.log2(3.0) + self.__slack
        for name, value in (('hs', hs), ('hsCond', hsCond), ('h1Cond', h1Cond)):
            if not (-self.__slack <= value <= cap):
                raise DistributionInvalidJointError(
                    'Entropy "{}" outside of [0, log 3]: {}'.format(name, value)
                )

        if hsCond > hs + self.__slack:
            raise DistributionInvalidJointError(
                'Conditional entropy {} exceeds the entropy {}'.format(hsCond, hs)
            )

        self.__hs = hs
        self.__hsCond = hsCond
        self.__h1Cond = h1Cond

    def hs(self):
        """
        Return H(X1 + X2).
        """
        return self.__hs

    def hsCond(self):
        """
        Return H(X1 + X2 | U).
        """
        return self.__hsCond

    def h1Cond(self):
        """
        Return H(X1 | U).
        """
        return self.__h1Cond

    def admits(self, rates, tolerance=1e-9):
        """
        Return a boolean telling if the rate triple satisfies the entropy region.

        r0 + r1 + r2 <= H(X1 + X2), r1 + r2 <= H(X1 + X2 | U) and r1 <= H(X1 | U).
        """
        return rates.r0() + rates.r1() + rates.r2() <= self.__hs + tolerance and \
            rates.r1() + rates.r2() <= self.__hsCond + tolerance and \
            rates.r1() <= self.__h1Cond + tolerance

    def toDict(self):
        """
        Return the triplet as a dictionary.
        """
        return {
            'hs': self.__hs,
            'hsCond': self.__hsCond,
            'h1Cond': self.__h1Cond
        }

    def isClose(self, other, tolerance=1e-12):
        """
        Return a boolean telling if both triplets agree within the tolerance.
        """
        return abs(self.__hs - other.hs()) <= tolerance and \
            abs(self.__hsCond - other.hsCond()) <= tolerance and \
            abs(self.__h1Cond - other.h1Cond()) <= tolerance

    def __repr__(self):
        """
        Return a string representation of the triplet.
        """
        return 'EntropyTriplet(hs={}, hsCond={}, h1Cond={})'.format(
            self.__hs,
            self.__hsCond,
            self.__h1Cond
        )
