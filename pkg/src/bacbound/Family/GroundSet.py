from ..BacBoundError import BacBoundError

class FamilyError(BacBoundError):
    """Family error."""

class GroundSetError(FamilyError):
    """Ground set error."""

class GroundSet(object):
    """
    Ground set [n] = {1, ..., n}.

    Subsets are represented as integer masks where bit i - 1 stands for the
    element i.
    """

    maxSize = 64

    def __init__(self, n):
        """
        Create a ground set object.
        """
        if isinstance(n, bool) or not isinstance(n, int):
            raise GroundSetError(
                'Ground set size must be an integer, got "{}"'.format(n)
            )

        if not (1 <= n <= self.maxSize):
            raise GroundSetError(
                'Ground set size must be in [1, {}], got "{}"'.format(self.maxSize, n)
            )

        self.__n = n

    def n(self):
        """
        Return the number of elements.
        """
        return self.__n

    def fullMask(self):
        """
        Return the mask of the whole ground set.
        """
        return (1 << self.__n) - 1

    def contains(self, mask):
        """
        Return a boolean telling if the mask is a subset of the ground set.
        """
        return isinstance(mask, int) and 0 <= mask <= self.fullMask()

    def checkMask(self, mask):
        """
        Raise GroundSetError when the mask does not fit the ground set.
        """
        if not self.contains(mask):
            raise GroundSetError(
                'Subset mask "{}" does not fit a ground set of size {}'.format(mask, self.__n)
            )

        return mask

    def maskFromElements(self, elements):
        """
        Return the mask of a subset given by its (1-based) elements.
        """
        mask = 0
        for element in elements:
            if isinstance(element, bool) or not isinstance(element, int) or not (1 <= element <= self.__n):
                raise GroundSetError(
                    'Element "{}" is not in [1, {}]'.format(element, self.__n)
                )
            mask |= 1 << (element - 1)

        return mask

    def elementsFromMask(self, mask):
        """
        Return the sorted (1-based) elements of the subset mask.
        """
        self.checkMask(mask)
        return [index + 1 for index in range(self.__n) if mask >> index & 1]

    def __eq__(self, other):
        """
        Compare ground sets by size.
        """
        return isinstance(other, GroundSet) and self.n() == other.n()

    def __hash__(self):
        """
        Return a hash based on the size.
        """
        return hash(self.__n)

    def __repr__(self):
        """
        Return a string representation of the ground set.
        """
        return 'GroundSet({})'.format(self.__n)
