"""
Operations on pairs of families.
"""

from .GroundSet import GroundSet, FamilyError
from .Family import Family

def sumKey(first, second):
    """
    Return a key identifying the integer vector first + second.

    The sum is 2 where both masks have the element and 1 where exactly one has it.
    """
    return (first & second, first ^ second)

def isMultisetUnionFree(f1, f2):
    """
    Return a boolean telling if all the sums of a member of f1 and a member of f2 are distinct.
    """
    f1.checkSameGround(f2)
    f1.checkDistinct()
    f2.checkDistinct()

    sums = set()
    for first in f1:
        for second in f2:
            key = sumKey(first, second)
            if key in sums:
                return False
            sums.add(key)

    return True

def sComplementPairCount(f1, f2, subsetMask):
    """
    Return the number of pairs whose projections on S are disjoint and cover S.
    """
    f1.checkSameGround(f2)
    f1.ground().checkMask(subsetMask)

    return sum(
        1 for first in f1 for second in f2
        if first & subsetMask == subsetMask & ~second
    )

def systematicFamily(n, subsetMask, rng):
    """
    Return a family of 2^|S| members shattered by S, with random bits outside of S.
    """
    ground = GroundSet(n)
    ground.checkMask(subsetMask)
    complementBits = [index for index in range(n) if not subsetMask >> index & 1]
    inside = [index for index in range(n) if subsetMask >> index & 1]

    members = []
    for pattern in range(1 << len(inside)):
        member = sum(1 << index for position, index in enumerate(inside) if pattern >> position & 1)
        bits = rng.integers(0, 2, size=len(complementBits))
        member |= sum(1 << index for index, bit in zip(complementBits, bits) if bit)
        members.append(member)

    return Family(ground, members)

def randomFamily(n, size, rng):
    """
    Return a family of distinct members drawn uniformly at random (n <= 25).
    """
    if n > Family.maxEnumerationSize:
        raise FamilyError(
            'Random families are limited to {} elements, got "{}"'.format(Family.maxEnumerationSize, n)
        )

    size = min(size, 1 << n)
    members = rng.choice(1 << n, size=size, replace=False)
    return Family(n, [int(member) for member in members])

def hammingBall(n, radius):
    """
    Return the family of all subsets of cardinality at most radius.
    """
    return Family.hammingBall(n, radius)
