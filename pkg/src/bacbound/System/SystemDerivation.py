from collections import defaultdict
from ..Family import Family, GroundSet, isMultisetUnionFree
from .UnionFreeSystem import UnionFreeSystem, UnionFreeSystemError

class SystemDerivationError(UnionFreeSystemError):
    """System derivation error."""

class SystemDerivation(object):
    """
    Derives a union-free system from a union-free pair and a set S k-shattered by f1.

    Both families are partitioned by their projection G on S. Every f1 cell is
    trimmed to its k smallest members, every f2 cell to its smallest 2^k' members
    (largest power of two not above the cell size). The most populous k' is kept
    (the smallest one on ties) and the f1 cell of S - G is paired with the f2 cell
    of G. Members of an S-complement pair sum to 1 on S, so projecting on the
    complement of S keeps the system union-free.
    """

    def __init__(self, f1, f2, subsetMask, k):
        """
        Create a derivation object.
        """
        assert isinstance(f1, Family) and isinstance(f2, Family), "Invalid family type!"

        f1.checkSameGround(f2)
        f1.ground().checkMask(subsetMask)

        if subsetMask == f1.ground().fullMask():
            raise SystemDerivationError(
                'The shattered set must leave at least one element out'
            )

        if not isMultisetUnionFree(f1, f2):
            raise SystemDerivationError(
                'Input pair is not multiset-union-free'
            )

        if not f1.isKShattered(subsetMask, k):
            raise SystemDerivationError(
                'Subset mask "{}" is not {}-shattered by the first family'.format(subsetMask, k)
            )

        self.__f1 = f1
        self.__f2 = f2
        self.__subsetMask = subsetMask
        self.__k = k

    def complementGround(self):
        """
        Return the ground set of the derived system (the elements outside of S).
        """
        return GroundSet(self.__f1.n() - bin(self.__subsetMask).count('1'))

    def cells(self):
        """
        Return a tuple (firstCells, secondCells) of the trimmed partitions by projection on S.
        """
        firstCells = self.__partition(self.__f1)
        secondCells = self.__partition(self.__f2)

        for projection, members in firstCells.items():
            firstCells[projection] = members[:self.__k]

        for projection, members in secondCells.items():
            secondCells[projection] = members[:1 << (len(members).bit_length() - 1)]

        return (firstCells, secondCells)

    def selectedExponent(self, secondCells):
        """
        Return the exponent k' shared by the largest number of f2 cells.
        """
        population = defaultdict(int)
        for members in secondCells.values():
            population[len(members).bit_length() - 1] += 1

        if not population:
            raise SystemDerivationError(
                'No projection class survives the derivation'
            )

        return min(population, key=lambda exponent: (-population[exponent], exponent))

    def run(self):
        """
        Return a tuple (system, rates) of the derived system over the complement of S.
        """
        firstCells, secondCells = self.cells()
        exponent = self.selectedExponent(secondCells)

        ground = self.complementGround()
        outside = [
            index for index in range(self.__f1.n())
            if not self.__subsetMask >> index & 1
        ]

        pairs = []
        for projection in sorted(secondCells):
            if len(secondCells[projection]) != 1 << exponent:
                continue

            complement = self.__subsetMask & ~projection
            pairs.append((
                Family(ground, [self.__compress(member, outside) for member in firstCells[complement]]),
                Family(ground, [self.__compress(member, outside) for member in secondCells[projection]])
            ))

        if not pairs:
            raise SystemDerivationError(
                'No projection class survives the derivation'
            )

        system = UnionFreeSystem(ground, pairs)
        return (system, system.rates())

    def __partition(self, family):
        """
        Return a dictionary from projection on S to the sorted members with that projection.
        """
        result = defaultdict(list)
        for member in family:
            result[member & self.__subsetMask].append(member)

        return dict(result)

    @classmethod
    def __compress(cls, member, positions):
        """
        Return the mask made by the bits of the member at the input positions.
        """
        return sum(1 << target for target, source in enumerate(positions) if member >> source & 1)

def deriveSystem(f1, f2, subsetMask, k):
    """
    Return a tuple (system, rates) derived from the pair and the k-shattered set.
    """
    return SystemDerivation(f1, f2, subsetMask, k).run()
