import math
from .GroundSet import FamilyError

class SoftSauerParamsError(FamilyError):
    """Soft sauer params error."""

class SoftSauerParams(object):
    """
    Parameters (n, d, k) of the soft Sauer-Perles-Shelah bound.

    The bound applies to families on [n] where no set of size d is k-shattered.
    """

    def __init__(self, n, d, k):
        """
        Create a params object.
        """
        for name, value in (('n', n), ('d', d), ('k', k)):
            if isinstance(value, bool) or not isinstance(value, int):
                raise SoftSauerParamsError(
                    'Parameter "{}" must be an integer, got "{}"'.format(name, value)
                )

        if not (1 <= d <= n):
            raise SoftSauerParamsError(
                'Parameters must satisfy 1 <= d <= n, got n={} d={}'.format(n, d)
            )

        if k < 1:
            raise SoftSauerParamsError(
                'Multiplicity "k" must be positive, got "{}"'.format(k)
            )

        self.__n = n
        self.__d = d
        self.__k = k

    def n(self):
        """
        Return the ground set size.
        """
        return self.__n

    def d(self):
        """
        Return the size of the sets that are not k-shattered.
        """
        return self.__d

    def k(self):
        """
        Return the multiplicity.
        """
        return self.__k

    def threshold(self):
        """
        Return the smallest t in [d, n] with C(n - d, t - d) >= k, or n when none qualifies.
        """
        for t in range(self.__d, self.__n + 1):
            if math.comb(self.__n - self.__d, t - self.__d) >= self.__k:
                return t

        return self.__n

    def toDict(self):
        """
        Return the params as a dictionary.
        """
        return {
            'n': self.__n,
            'd': self.__d,
            'k': self.__k
        }

    def __eq__(self, other):
        """
        Compare params by value.
        """
        return isinstance(other, SoftSauerParams) and self.toDict() == other.toDict()

    def __hash__(self):
        """
        Return a hash based on the values.
        """
        return hash((self.__n, self.__d, self.__k))

    def __repr__(self):
        """
        Return a string representation of the params.
        """
        return 'SoftSauerParams(n={}, d={}, k={})'.format(self.__n, self.__d, self.__k)
