import itertools
import time
from .GroundSet import GroundSet, FamilyError
from .Family import Family

class PairSearchError(FamilyError):
    """Pair search error."""

class PairSearchResult(object):
    """
    Best multiset-union-free pair found by the search.
    """

    def __init__(self, f1, f2, exact, elapsed):
        """
        Create a search result.
        """
        self.__f1 = f1
        self.__f2 = f2
        self.__exact = exact
        self.__elapsed = elapsed

    def f1(self):
        """
        Return the first family.
        """
        return self.__f1

    def f2(self):
        """
        Return the second family.
        """
        return self.__f2

    def product(self):
        """
        Return |f1| |f2|.
        """
        return self.__f1.size() * self.__f2.size()

    def exact(self):
        """
        Return a boolean telling if the search completed (the result is optimal).
        """
        return self.__exact

    def elapsed(self):
        """
        Return the search time in seconds.
        """
        return self.__elapsed

    def toDict(self):
        """
        Return the result as a dictionary.
        """
        return {
            'n': self.__f1.n(),
            'f1': self.__f1.subsets(),
            'f2': self.__f2.subsets(),
            'product': self.product(),
            'exact': self.__exact
        }

class PairSearch(object):
    """
    Branch and bound search of a multiset-union-free pair maximizing |f1| |f2|.

    Flipping a coordinate in both families keeps the pair union-free, so f1 is
    restricted to families containing the empty set. For each f1 the members
    allowed in f2 form the independent sets of a conflict graph (c and c' conflict
    when c - c' is a difference of two members of f1), explored by a depth-first
    search that includes smaller masks first. Among optimal pairs the one with the
    lexicographically smallest (f1, f2) member tuples is returned.
    """

    maxSize = 6
    defaultBudget = 60.0
    __clockCheckInterval = 4096

    def __init__(self, n, budget=defaultBudget):
        """
        Create a search object.
        """
        if not (1 <= n <= self.maxSize):
            raise PairSearchError(
                'Pair search supports 1 <= n <= {}, got "{}"'.format(self.maxSize, n)
            )

        if not budget > 0.0:
            raise PairSearchError(
                'Search budget must be positive, got "{}"'.format(budget)
            )

        self.__ground = GroundSet(n)
        self.__budget = float(budget)

    def run(self):
        """
        Execute the search returning a PairSearchResult.
        """
        startTime = time.monotonic()
        self.__deadline = startTime + self.__budget
        self.__ticks = 0
        self.__timedOut = False

        n = self.__ground.n()
        masks = list(range(1 << n))
        cap = 3 ** n

        # f1 = {0}, f2 = everything is always feasible
        best = (len(masks), (0,), tuple(masks))

        for size in range(len(masks), 0, -1):
            if size * len(masks) < best[0]:
                break

            for rest in itertools.combinations(masks[1:], size - 1):
                if self.__expired():
                    break

                f1 = (0,) + rest
                need = -(-best[0] // size)
                if need > min(len(masks), cap // size):
                    continue

                f2 = self.__largestCompatible(f1, masks, need)
                if f2 is None:
                    continue

                candidate = (size * len(f2), f1, f2)
                if candidate[0] > best[0] or (candidate[0] == best[0] and candidate[1:] < best[1:]):
                    best = candidate

            if self.__timedOut:
                break

        return PairSearchResult(
            Family(self.__ground, best[1]),
            Family(self.__ground, best[2]),
            not self.__timedOut,
            time.monotonic() - startTime
        )

    def __largestCompatible(self, f1, masks, need):
        """
        Return the lexicographically first largest f2 of size at least need (or None).
        """
        differences = set()
        for first, second in itertools.permutations(f1, 2):
            differences.add((first & ~second, second & ~first))

        neighbours = {
            mask: frozenset(
                other for other in masks
                if other != mask and (mask & ~other, other & ~mask) in differences
            )
            for mask in masks
        }

        found = [None, need - 1]

        def explore(chosen, candidates):
            if self.__expired():
                return

            if len(chosen) > found[1]:
                found[0] = tuple(chosen)
                found[1] = len(chosen)

            for position, mask in enumerate(candidates):
                remaining = candidates[position + 1:]
                if len(chosen) + 1 + len(remaining) <= found[1]:
                    return

                chosen.append(mask)
                explore(chosen, [other for other in remaining if other not in neighbours[mask]])
                chosen.pop()

        explore([], masks)
        return found[0]

    def __expired(self):
        """
        Return a boolean telling if the budget is exhausted (checking the clock periodically).
        """
        if self.__timedOut:
            return True

        self.__ticks += 1
        if self.__ticks % self.__clockCheckInterval == 0 and time.monotonic() > self.__deadline:
            self.__timedOut = True

        return self.__timedOut

def exhaustivePairSearch(n, budget=PairSearch.defaultBudget):
    """
    Return the PairSearchResult maximizing |f1| |f2| over union-free pairs on [n].
    """
    return PairSearch(n, budget).run()
