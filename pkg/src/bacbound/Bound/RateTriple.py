import math
from .RatePoint import BoundDomainError

class RateTriple(object):
    """
    Rate triple (r0, r1, r2) of a multiset-union-free system, in bits per element.

    All rates are non-negative; r1 and r2 are at most 1.
    """

    __slack = 1e-12

    def __init__(self, r0, r1, r2):
        """
        Create a rate triple.
        """
        r0, r1, r2 = float(r0), float(r1), float(r2)
        for name, value in (('r0', r0), ('r1', r1), ('r2', r2)):
            if value < -self.__slack:
                raise BoundDomainError(
                    'Rate "{}" must be non-negative, got {}'.format(name, value)
                )

        for name, value in (('r1', r1), ('r2', r2)):
            if value > 1.0 + self.__slack:
                raise BoundDomainError(
                    'Rate "{}" must be at most 1, got {}'.format(name, value)
                )

        self.__r0 = max(r0, 0.0)
        self.__r1 = min(max(r1, 0.0), 1.0)
        self.__r2 = min(max(r2, 0.0), 1.0)

    def r0(self):
        """
        Return the rate of the number of pairs.
        """
        return self.__r0

    def r1(self):
        """
        Return the rate of the first families.
        """
        return self.__r1

    def r2(self):
        """
        Return the rate of the second families.
        """
        return self.__r2

    def sum(self):
        """
        Return r0 + r1 + r2.
        """
        return self.__r0 + self.__r1 + self.__r2

    def toDict(self):
        """
        Return the triple as a dictionary.
        """
        return {'r0': self.__r0, 'r1': self.__r1, 'r2': self.__r2}

    @classmethod
    def fromCardinalities(cls, n, m0, m1, m2):
        """
        Create the triple (log M0 / n, log M1 / n, log M2 / n).
        """
        assert n > 0, "ground set size must be positive"
        return cls(
            math.log2(m0) / n,
            math.log2(m1) / n,
            math.log2(m2) / n
        )

    def __eq__(self, other):
        """
        Compare two triples.
        """
        return isinstance(other, RateTriple) and \
            (self.r0(), self.r1(), self.r2()) == (other.r0(), other.r1(), other.r2())

    def __hash__(self):
        """
        Return the triple hash.
        """
        return hash((self.__r0, self.__r1, self.__r2))

    def __repr__(self):
        """
        Return a string representation of the triple.
        """
        return 'RateTriple(r0={:.6f}, r1={:.6f}, r2={:.6f})'.format(self.__r0, self.__r1, self.__r2)
