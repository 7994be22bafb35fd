import math
from .Suite import Suite
from ..Family import Family, SoftSauerParams, softSauerBound, softSauerLevelBound, sauerBound
from ..Family import isMultisetUnionFree, sComplementPairCount, systematicFamily, randomFamily, hammingBall

class FamiliesSuite(Suite):
    """
    Checks of shifting, shattering and the soft Sauer-Perles-Shelah bound.
    """

    multiplicities = (1, 2, 4)

    def checks(self):
        """
        Implement the family checks.
        """
        return [
            self.shifting,
            self.softSauerSoundness,
            self.hammingBallSoundness,
            self.hammingBallTightness,
            self.sauerConsistency,
            self.levelBound,
            self.weldonPairs,
            self.unionFreeSymmetry
        ]

    def shifting(self):
        """
        Shifting keeps the size, returns a monotone family and transfers shattering back.
        """
        violations = []
        for _ in range(self.samples(1000)):
            family = self.__randomFamily(8)
            shifted = family.shiftMonotonize()

            failed = shifted.size() != family.size() or not shifted.isMonotone()
            for mask in range(1 << family.n()):
                if failed:
                    break

                for k in range(1, 5):
                    if shifted.isKShattered(mask, k) and not family.isKShattered(mask, k):
                        failed = True
                        break

            violations.append(1.0 if failed else 0.0)

        return self.result('families.shifting', violations)

    def softSauerSoundness(self):
        """
        |f| <= softSauerBound(n, d, k) + 1 where d - 1 is the largest k-shattered size.

        The bound counts the members of size at least 1, the extra unit is the empty set.
        """
        violations = []
        for _ in range(self.samples(10000)):
            family = self.__randomFamily(12)
            k = int(self.rng().choice(self.multiplicities))
            violations.append(self.__soundnessViolation(family, k))

        return self.result('families.softSauerSoundness', violations)

    def hammingBallSoundness(self):
        """
        Soundness of the soft bound over the hamming balls.
        """
        violations = []
        for n in range(1, 13):
            for radius in range(n + 1):
                ball = hammingBall(n, radius)
                for k in self.multiplicities:
                    violations.append(self.__soundnessViolation(ball, k))

        return self.result('families.hammingBallSoundness', violations)

    def hammingBallTightness(self):
        """
        For k = C(n - d, t - d) the soft bound is within 1 + n/d of the radius t ball.
        """
        violations = []
        for n in range(1, 13):
            for d in range(1, n + 1):
                for top in range(d, d + (n - d) // 2 + 1):
                    params = SoftSauerParams(n, d, math.comb(n - d, top - d))
                    if params.threshold() != top:
                        violations.append(1.0)
                        continue

                    violations.append(
                        float(softSauerBound(params) - (1 + n / d) * sauerBound(n, top))
                    )

        return self.result('families.hammingBallTightness', violations)

    def sauerConsistency(self):
        """
        sum_{t<d} C(n, t) - 1 <= softSauerBound(n, d, 1) <= (1 + n/d) sum_{t<=d} C(n, t).
        """
        violations = []
        for n in range(1, 31):
            for d in range(1, n + 1):
                value = softSauerBound(SoftSauerParams(n, d, 1))
                violations.append(float(sauerBound(n, d - 1) - 1 - value))
                violations.append(float(value - (1 + n / d) * sauerBound(n, d)))

        return self.result('families.sauerConsistency', violations)

    def levelBound(self):
        """
        The level-by-level bound never exceeds the soft bound.
        """
        violations = []
        for n in range(1, 21):
            for d in range(1, n + 1):
                for k in (1, 2, 3, 4, 8, 16, 100):
                    params = SoftSauerParams(n, d, k)
                    violations.append(float(softSauerLevelBound(params) - softSauerBound(params)))

        return self.result('families.levelBound', violations)

    def weldonPairs(self):
        """
        A union-free pair with a systematic first family has at most 3^(n - |S|) S-complement pairs.
        """
        violations = []
        for _ in range(self.samples(200)):
            n = int(self.rng().integers(1, 7))
            subsetMask = int(self.rng().integers(0, 1 << n))
            f1 = systematicFamily(n, subsetMask, self.rng())

            # greedy random second family keeping the pair union-free
            members = []
            for candidate in self.rng().permutation(1 << n):
                trial = Family(n, members + [int(candidate)])
                if isMultisetUnionFree(f1, trial):
                    members.append(int(candidate))

            f2 = Family(n, members)
            count = sComplementPairCount(f1, f2, subsetMask)
            violations.append(float(count - 3 ** (n - bin(subsetMask).count('1'))))

        return self.result('families.weldonPairs', violations)

    def unionFreeSymmetry(self):
        """
        Union-freeness does not depend on the order of the pair.
        """
        violations = []
        for _ in range(self.samples(1000)):
            n = int(self.rng().integers(1, 5))
            f1 = randomFamily(n, int(self.rng().integers(1, (1 << n) + 1)), self.rng())
            f2 = randomFamily(n, int(self.rng().integers(1, (1 << n) + 1)), self.rng())
            violations.append(0.0 if isMultisetUnionFree(f1, f2) == isMultisetUnionFree(f2, f1) else 1.0)

        return self.result('families.unionFreeSymmetry', violations)

    def __randomFamily(self, maxSize):
        """
        Return a random family over a random ground set of at most maxSize elements.
        """
        n = int(self.rng().integers(1, maxSize + 1))
        return randomFamily(n, int(self.rng().integers(1, (1 << n) + 1)), self.rng())

    @classmethod
    def __soundnessViolation(cls, family, k):
        """
        Return |f| - softSauerBound - 1 for d one above the largest k-shattered size.
        """
        _, size = family.maxKShattered(k)
        d = size + 1
        if d > family.n() or d < 1:
            return 0.0

        return float(family.size() - softSauerBound(SoftSauerParams(family.n(), d, k)) - 1)


# registering suite
Suite.register(
    'families',
    FamiliesSuite
)
