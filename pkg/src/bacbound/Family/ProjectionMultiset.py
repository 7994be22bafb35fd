from collections import Counter

class ProjectionMultiset(object):
    """
    Projection of a family on a subset S, keeping multiplicities.
    """

    def __init__(self, subsetMask, members):
        """
        Create a projection multiset from the members of the source family.
        """
        self.__subsetMask = subsetMask
        self.__counts = Counter(member & subsetMask for member in members)

    def subsetMask(self):
        """
        Return the mask of the set S.
        """
        return self.__subsetMask

    def counts(self):
        """
        Return a dictionary from projected mask to multiplicity.
        """
        return dict(self.__counts)

    def count(self, mask):
        """
        Return the multiplicity of the projected mask.
        """
        return self.__counts.get(mask, 0)

    def total(self):
        """
        Return the sum of multiplicities (the size of the source family).
        """
        return sum(self.__counts.values())

    def support(self):
        """
        Return the sorted list of projected masks with positive multiplicity.
        """
        return sorted(self.__counts.keys())

    def minMultiplicity(self):
        """
        Return the smallest multiplicity over all subsets of S (zero when one is missing).
        """
        if len(self.__counts) < 1 << bin(self.__subsetMask).count('1'):
            return 0

        return min(self.__counts.values())

    def __repr__(self):
        """
        Return a string representation of the projection.
        """
        return 'ProjectionMultiset({}, {})'.format(
            self.__subsetMask,
            dict(sorted(self.__counts.items()))
        )
