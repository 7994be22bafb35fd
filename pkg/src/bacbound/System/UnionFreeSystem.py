import json
import math
import itertools
from ..BacBoundError import BacBoundError
from ..Bound import RateTriple
from ..Family import Family, GroundSet, sumKey

class UnionFreeSystemError(BacBoundError):
    """Union free system error."""

class UnionFreeSystemInvariantError(UnionFreeSystemError):
    """Union free system invariant error."""

    def __init__(self, message, index):
        """
        Create the error carrying the index of the offending pair.
        """
        super(UnionFreeSystemInvariantError, self).__init__(message)
        self.__index = index

    def index(self):
        """
        Return the index of the offending pair.
        """
        return self.__index

class SystemConstructionError(UnionFreeSystemError):
    """System construction error."""

class UnionFreeSystem(object):
    """
    Set of M0 pairs of families (each f1 of size M1, each f2 of size M2).

    The system is valid when every pair is multiset-union-free and the sums of
    different pairs never coincide.
    """

    maxLog3Size = 15

    def __init__(self, ground, pairs):
        """
        Create a system object.
        """
        if isinstance(ground, int) and not isinstance(ground, bool):
            ground = GroundSet(ground)

        assert isinstance(ground, GroundSet), "Invalid ground set type!"

        pairs = [tuple(pair) for pair in pairs]
        if not pairs:
            raise UnionFreeSystemError(
                'A system requires at least one pair'
            )

        for index, (f1, f2) in enumerate(pairs):
            assert isinstance(f1, Family) and isinstance(f2, Family), "Invalid family type!"

            if f1.ground() != ground or f2.ground() != ground:
                raise UnionFreeSystemInvariantError(
                    'Pair {} does not live on {}'.format(index, ground),
                    index
                )

            if f1.size() != pairs[0][0].size() or f2.size() != pairs[0][1].size():
                raise UnionFreeSystemInvariantError(
                    'Pair {} has cardinalities ({}, {}), expected ({}, {})'.format(
                        index,
                        f1.size(),
                        f2.size(),
                        pairs[0][0].size(),
                        pairs[0][1].size()
                    ),
                    index
                )

        self.__ground = ground
        self.__pairs = pairs

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

    def pairs(self):
        """
        Return the list of (f1, f2) pairs.
        """
        return list(self.__pairs)

    def m0(self):
        """
        Return the number of pairs.
        """
        return len(self.__pairs)

    def m1(self):
        """
        Return the size of the first families.
        """
        return self.__pairs[0][0].size()

    def m2(self):
        """
        Return the size of the second families.
        """
        return self.__pairs[0][1].size()

    def check(self):
        """
        Raise UnionFreeSystemInvariantError for the first pair breaking validity.
        """
        owners = {}
        for index, (f1, f2) in enumerate(self.__pairs):
            if f1.hasDuplicates() or f2.hasDuplicates():
                raise UnionFreeSystemInvariantError(
                    'Pair {} contains duplicate members'.format(index),
                    index
                )

            for first, second in itertools.product(f1, f2):
                key = sumKey(first, second)
                owner = owners.get(key)
                if owner == index:
                    raise UnionFreeSystemInvariantError(
                        'Pair {} is not multiset-union-free'.format(index),
                        index
                    )

                if owner is not None:
                    raise UnionFreeSystemInvariantError(
                        'Pair {} shares a sum vector with pair {}'.format(index, owner),
                        index
                    )

                owners[key] = index

    def isValid(self):
        """
        Return a boolean telling if the system is multiset-union-free.
        """
        try:
            self.check()
        except UnionFreeSystemInvariantError:
            return False

        return True

    def sumVectors(self):
        """
        Return the set of distinct sum vectors across all pairs, as ternary tuples.
        """
        result = set()
        for f1, f2 in self.__pairs:
            for first, second in itertools.product(f1, f2):
                result.add(
                    tuple((first >> index & 1) + (second >> index & 1) for index in range(self.n()))
                )

        return result

    def rates(self):
        """
        Return the RateTriple (log M0 / n, log M1 / n, log M2 / n).
        """
        return RateTriple.fromCardinalities(self.n(), self.m0(), self.m1(), self.m2())

    def toDict(self):
        """
        Return the system as a dictionary (families in the text format).
        """
        return {
            'n': self.n(),
            'm0': self.m0(),
            'm1': self.m1(),
            'm2': self.m2(),
            'pairs': [[f1.toText(), f2.toText()] for f1, f2 in self.__pairs]
        }

    def toJson(self):
        """
        Return the system serialized as json.
        """
        return json.dumps(
            self.toDict(),
            sort_keys=True,
            indent=4,
            separators=(',', ': ')
        )

    @classmethod
    def fromJson(cls, contents):
        """
        Create a system from its json serialization.
        """
        try:
            data = json.loads(contents)
            ground = GroundSet(int(data['n']))
            pairs = [
                (Family.fromText(first), Family.fromText(second))
                for first, second in data['pairs']
            ]
        except (ValueError, KeyError, TypeError) as err:
            raise UnionFreeSystemError(
                'Invalid system json: {}'.format(err)
            )

        system = cls(ground, pairs)
        for key, value in (('m0', system.m0()), ('m1', system.m1()), ('m2', system.m2())):
            if key in data and int(data[key]) != value:
                raise UnionFreeSystemError(
                    'Declared "{}" ({}) does not match the pairs ({})'.format(key, data[key], value)
                )

        return system

    @classmethod
    def log3Construction(cls, n):
        """
        Return the system pairing every set F of size 2n/3 with all subsets of F.

        The rates are (log C(n, 2n/3) / n, 0, 2/3), summing to log 3 as n grows.
        """
        if isinstance(n, bool) or not isinstance(n, int) or n < 3 or n % 3:
            raise SystemConstructionError(
                'Construction requires a positive multiple of 3, got "{}"'.format(n)
            )

        if n > cls.maxLog3Size:
            raise SystemConstructionError(
                'Construction is limited to n <= {}, got "{}"'.format(cls.maxLog3Size, n)
            )

        ground = GroundSet(n)
        pairs = []
        for combination in itertools.combinations(range(n), 2 * n // 3):
            center = sum(1 << index for index in combination)
            subsets = [
                sum(1 << index for index in chosen)
                for size in range(len(combination) + 1)
                for chosen in itertools.combinations(combination, size)
            ]
            pairs.append((Family(ground, [center]), Family(ground, subsets)))

        assert len(pairs) == math.comb(n, 2 * n // 3)
        return cls(ground, pairs)

    def __repr__(self):
        """
        Return a string representation of the system.
        """
        return 'UnionFreeSystem(n={}, m0={}, m1={}, m2={})'.format(
            self.n(),
            self.m0(),
            self.m1(),
            self.m2()
        )
