import math
from .Suite import Suite
from ..Family import exhaustivePairSearch
from ..System import UnionFreeSystem, deriveSystem
from ..Distribution import AuxBinaryJoint

class SystemsSuite(Suite):
    """
    Checks of the log 3 construction and of systems derived from optimal pairs.
    """

    constructionSizes = (3, 6, 9, 12)
    searchSizes = (1, 2, 3)

    def __init__(self, *args, **kwargs):
        """
        Create a systems suite.
        """
        super(SystemsSuite, self).__init__(*args, **kwargs)
        self.__searchResults = None

    def checks(self):
        """
        Implement the system checks.
        """
        return [
            self.construction,
            self.constructionSums,
            self.pairSearch,
            self.derivedSystems,
            self.regionSoundness
        ]

    def construction(self):
        """
        The log 3 construction is valid and its sum rate strictly increases toward log 3.
        """
        violations = []
        previous = 0.0
        for n in self.constructionSizes:
            system = UnionFreeSystem.log3Construction(n)
            current = system.rates().sum()
            violations.append(0.0 if system.isValid() else 1.0)
            violations.append(previous - current)
            violations.append(current - math.log2(3.0))
            previous = current

        return self.result('systems.log3Construction', violations)

    def constructionSums(self):
        """
        A valid system has M0 M1 M2 distinct sum vectors.
        """
        violations = []
        for n in self.constructionSizes[:2]:
            system = UnionFreeSystem.log3Construction(n)
            violations.append(
                abs(len(system.sumVectors()) - system.m0() * system.m1() * system.m2())
            )

        return self.result('systems.sumVectors', violations)

    def pairSearch(self):
        """
        Exact searches at small n return union-free pairs with product at most 3^n.
        """
        violations = []
        for result in self.__searches():
            sums = {
                (first & second, first ^ second)
                for first in result.f1() for second in result.f2()
            }
            violations.append(0.0 if result.exact() else 1.0)
            violations.append(abs(len(sums) - result.product()))
            violations.append(result.product() - 3 ** result.f1().n())

        return self.result('systems.pairSearch', violations)

    def derivedSystems(self):
        """
        Systems derived from optimal pairs are valid with sum rate at most log 3.
        """
        violations = []
        for system in self.__derivedSystems():
            violations.append(0.0 if system.isValid() else 1.0)
            violations.append(system.rates().sum() - math.log2(3.0))

        return self.result('systems.derivedSystems', violations, 1e-9)

    def regionSoundness(self):
        """
        The rates of a system satisfy the entropy region of its induced distribution.
        """
        systems = self.__derivedSystems() + [UnionFreeSystem.log3Construction(3)]
        violations = []
        for system in systems:
            triplet = AuxBinaryJoint.fromSystem(system).entropyTriplet()
            rates = system.rates()
            violations.append(rates.sum() - triplet.hs())
            violations.append(rates.r1() + rates.r2() - triplet.hsCond())
            violations.append(rates.r1() - triplet.h1Cond())

        return self.result('systems.regionSoundness', violations, 1e-9)

    def __searches(self):
        """
        Return the pair search results (computed once).
        """
        if self.__searchResults is None:
            self.__searchResults = [exhaustivePairSearch(n) for n in self.searchSizes]

        return self.__searchResults

    def __derivedSystems(self):
        """
        Return the systems derived from the optimal pairs using a largest proper shattered set.
        """
        systems = []
        for result in self.__searches():
            f1 = result.f1()
            mask, _ = f1.maxKShattered(1, sizeCap=f1.n() - 1)
            systems.append(deriveSystem(f1, result.f2(), mask, 1)[0])

        return systems


# registering suite
Suite.register(
    'systems',
    SystemsSuite
)
