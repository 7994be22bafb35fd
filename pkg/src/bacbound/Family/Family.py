import math
import itertools
import numpy as np
from .GroundSet import GroundSet, FamilyError
from .ProjectionMultiset import ProjectionMultiset

class FamilyGroundMismatchError(FamilyError):
    """Family ground mismatch error."""

class FamilyDuplicateMemberError(FamilyError):
    """Family duplicate member error."""

class FamilySearchBudgetError(FamilyError):
    """Family search budget error."""

class FamilyParseError(FamilyError):
    """Family parse error."""

class Family(object):
    """
    Family of subsets of a ground set, stored as sorted integer masks.

    Duplicate members are allowed (multiset semantics).
    """

    searchBudget = 2000000
    maxEnumerationSize = 25

    def __init__(self, ground, members=()):
        """
        Create a family object.
        """
        if isinstance(ground, int) and not isinstance(ground, bool):
            ground = GroundSet(ground)

        assert isinstance(ground, GroundSet), "Invalid ground set type!"

        self.__ground = ground
        self.__members = tuple(sorted(ground.checkMask(member) for member in members))

    def ground(self):
        """
        Return the ground set.
        """
        return self.__ground

    def n(self):
        """
        Return the size of the ground set.
        """
        return self.__ground.n()

    def members(self):
        """
        Return the sorted tuple of member masks.
        """
        return self.__members

    def size(self):
        """
        Return the number of members (counting duplicates).
        """
        return len(self.__members)

    def distinct(self):
        """
        Return a family without duplicate members.
        """
        return Family(self.__ground, set(self.__members))

    def hasDuplicates(self):
        """
        Return a boolean telling if some member is repeated.
        """
        return len(set(self.__members)) != len(self.__members)

    def checkDistinct(self):
        """
        Raise FamilyDuplicateMemberError when some member is repeated.
        """
        if self.hasDuplicates():
            raise FamilyDuplicateMemberError(
                'Family contains duplicate members: {}'.format(self)
            )

    def checkSameGround(self, other):
        """
        Raise FamilyGroundMismatchError when the families live on different ground sets.
        """
        assert isinstance(other, Family), "Invalid family type!"

        if self.ground() != other.ground():
            raise FamilyGroundMismatchError(
                'Ground set mismatch: {} and {}'.format(self.ground(), other.ground())
            )

    def subsets(self):
        """
        Return the members as lists of (1-based) elements.
        """
        return [self.__ground.elementsFromMask(member) for member in self.__members]

    def isMonotone(self):
        """
        Return a boolean telling if every subset of a member is a member.
        """
        members = set(self.__members)
        for member in members:
            for index in range(self.n()):
                if member >> index & 1 and member & ~(1 << index) not in members:
                    return False

        return True

    def project(self, subsetMask):
        """
        Return the projection multiset of the family on the subset mask.
        """
        self.__ground.checkMask(subsetMask)
        return ProjectionMultiset(subsetMask, self.__members)

    def isKShattered(self, subsetMask, k):
        """
        Return a boolean telling if every subset of S is hit by at least k projections.
        """
        self.__ground.checkMask(subsetMask)
        if k < 1:
            raise FamilyError(
                'Multiplicity must be positive, got "{}"'.format(k)
            )

        required = 1 << bin(subsetMask).count('1')
        if len(self.__members) < required * k:
            return False

        projected = np.array(self.__members, dtype=np.uint64) & np.uint64(subsetMask)
        _, counts = np.unique(projected, return_counts=True)

        return len(counts) == required and int(counts.min()) >= k

    def maxKShattered(self, k, sizeCap=None):
        """
        Return a tuple (mask, size) with a largest k-shattered subset.

        Sizes are searched from the largest feasible one down, ties go to the
        smallest mask. The result is (None, -1) when the family has less than
        k members.
        """
        if k < 1:
            raise FamilyError(
                'Multiplicity must be positive, got "{}"'.format(k)
            )

        if sizeCap is None:
            sizeCap = self.n()

        if sizeCap > self.maxEnumerationSize:
            raise FamilySearchBudgetError(
                'Shattering search is limited to sets of size {}, got "{}"'.format(
                    self.maxEnumerationSize,
                    sizeCap
                )
            )

        if self.size() < k:
            return (None, -1)

        # a k-shattered S needs k * 2^|S| members
        top = min(sizeCap, self.n(), int(math.floor(math.log2(self.size() / k))))
        if sum(math.comb(self.n(), size) for size in range(top + 1)) > self.searchBudget:
            raise FamilySearchBudgetError(
                'Shattering search over {} elements up to size {} exceeds the budget of {} sets'.format(
                    self.n(),
                    top,
                    self.searchBudget
                )
            )

        for size in range(top, -1, -1):
            masks = sorted(
                sum(1 << index for index in combination)
                for combination in itertools.combinations(range(self.n()), size)
            )
            for mask in masks:
                if self.isKShattered(mask, k):
                    return (mask, size)

        return (None, -1)

    def shiftMonotonize(self):
        """
        Return a monotone family of the same size obtained by shifting.

        For i = 1, ..., n (cycled until a full pass is a no-op) every member
        containing i whose removal of i is not a member gets i removed.
        """
        self.checkDistinct()

        members = set(self.__members)
        changed = True
        while changed:
            changed = False
            for index in range(self.n()):
                bit = 1 << index
                shifted = [
                    member for member in members
                    if member & bit and member & ~bit not in members
                ]

                if shifted:
                    changed = True
                    members.difference_update(shifted)
                    members.update(member & ~bit for member in shifted)

        return Family(self.__ground, members)

    def toText(self):
        """
        Return the family serialized in the text format.
        """
        lines = ['n={}'.format(self.n())]
        for elements in self.subsets():
            lines.append(','.join(map(str, elements)) if elements else '-')

        return '\n'.join(lines) + '\n'

    @classmethod
    def fromText(cls, contents):
        """
        Create a family from the text format.

        The first line is n=<int>, every following line is a comma separated
        list of elements or "-" for the empty set.
        """
        lines = [line.strip() for line in contents.splitlines()]
        lines = [line for line in lines if line and not line.startswith('#')]
        if not lines or not lines[0].startswith('n='):
            raise FamilyParseError(
                'Family text must start with "n=<int>"'
            )

        try:
            ground = GroundSet(int(lines[0][2:]))
        except ValueError:
            raise FamilyParseError(
                'Invalid ground set size line "{}"'.format(lines[0])
            )

        members = []
        for line in lines[1:]:
            if line == '-':
                members.append(0)
                continue

            try:
                elements = [int(token) for token in line.split(',')]
            except ValueError:
                raise FamilyParseError(
                    'Invalid subset line "{}"'.format(line)
                )
            members.append(ground.maskFromElements(elements))

        return cls(ground, members)

    @classmethod
    def fromSubsets(cls, n, subsets):
        """
        Create a family from subsets given as collections of (1-based) elements.
        """
        ground = GroundSet(n)
        return cls(ground, [ground.maskFromElements(subset) for subset in subsets])

    @classmethod
    def hammingBall(cls, n, radius):
        """
        Return the family of all subsets of cardinality at most radius.
        """
        if not (0 <= radius <= n <= cls.maxEnumerationSize):
            raise FamilySearchBudgetError(
                'Hamming ball requires 0 <= radius <= n <= {}, got n={} radius={}'.format(
                    cls.maxEnumerationSize,
                    n,
                    radius
                )
            )

        members = []
        for size in range(radius + 1):
            for combination in itertools.combinations(range(n), size):
                members.append(sum(1 << index for index in combination))

        return cls(GroundSet(n), members)

    def __len__(self):
        """
        Return the number of members.
        """
        return len(self.__members)

    def __iter__(self):
        """
        Iterate over the member masks.
        """
        return iter(self.__members)

    def __contains__(self, mask):
        """
        Return a boolean telling if the mask is a member.
        """
        return mask in self.__members

    def __eq__(self, other):
        """
        Compare families by ground set and members.
        """
        return isinstance(other, Family) and self.ground() == other.ground() and self.members() == other.members()

    def __hash__(self):
        """
        Return a hash based on the ground set and members.
        """
        return hash((self.__ground, self.__members))

    def __repr__(self):
        """
        Return a string representation of the family.
        """
        return 'Family(n={}, {})'.format(
            self.n(),
            ['{' + ','.join(map(str, elements)) + '}' for elements in self.subsets()]
        )
