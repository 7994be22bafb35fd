import math
import numpy as np
from .Suite import Suite
from ..Entropy import h, hInv, entropy, star

class EntropySuite(Suite):
    """
    Checks of the entropy primitives.
    """

    def checks(self):
        """
        Implement the entropy checks.
        """
        return [
            self.symmetry,
            self.inverse,
            self.convolution,
            self.uniform,
            self.grouping,
            self.groupingBound,
            self.associativity
        ]

    def symmetry(self):
        """
        h(p) = h(1 - p).
        """
        points = self.rng().uniform(0.0, 1.0, self.samples(1000))
        return self.result(
            'entropy.symmetry',
            (abs(h(float(p)) - h(1.0 - float(p))) for p in points),
            1e-12
        )

    def inverse(self):
        """
        h(hInv(x)) = x and hInv(x) in [0, 1/2].
        """
        points = self.rng().uniform(0.0, 1.0, self.samples(1000))
        violations = []
        for x in points:
            p = hInv(float(x))
            violations.append(max(abs(h(p) - float(x)), -p, p - 0.5))

        return self.result('entropy.inverse', violations, 1e-9)

    def convolution(self):
        """
        p * 1/2 = 1/2 and p * q = q * p.
        """
        pairs = self.rng().uniform(0.0, 1.0, (self.samples(1000), 2))
        return self.result(
            'entropy.convolution',
            (
                max(abs(star(p, 0.5) - 0.5), abs(star(p, q) - star(q, p)))
                for p, q in pairs
            ),
            1e-12
        )

    def grouping(self):
        """
        H(p0, p1, p2) = h(p0) + (1 - p0) h(p1 / (1 - p0)), the second term vanishing at p0 = 1.
        """
        return self.result(
            'entropy.grouping',
            (abs(entropy(pmf) - self.__groupedEntropy(*pmf)) for pmf in self.__ternaryPmfs()),
            1e-12
        )

    def groupingBound(self):
        """
        H(p0, p1, p2) <= h(p0) + 1 - p0, with equality exactly when p1 = p2.
        """
        violations = []
        for p0, p1, p2 in self.__ternaryPmfs():
            gap = h(p0) + 1.0 - p0 - entropy([p0, p1, p2])
            violations.append(-gap)

            # the symmetric split of the same p0 attains the bound
            rest = (1.0 - p0) / 2.0
            violations.append(abs(h(p0) + 1.0 - p0 - entropy([p0, rest, max(1.0 - p0 - rest, 0.0)])))

            # a visibly asymmetric split stays strictly below it
            if abs(p1 - p2) > 1e-3:
                violations.append(0.0 if gap > 0.0 else 1.0)

        return self.result('entropy.groupingBound', violations, 1e-9)

    def associativity(self):
        """
        (p * q) * r = p * (q * r).
        """
        triples = self.rng().uniform(0.0, 1.0, (self.samples(1000), 3))
        return self.result(
            'entropy.associativity',
            (
                abs(star(star(p, q), r) - star(p, star(q, r)))
                for p, q, r in triples
            ),
            1e-15
        )

    def uniform(self):
        """
        The entropy of the uniform pmf over m values is log m.
        """
        return self.result(
            'entropy.uniform',
            (abs(entropy(np.full(m, 1.0 / m)) - math.log2(m)) for m in range(1, 65)),
            1e-9
        )

    def __ternaryPmfs(self):
        """
        Return random ternary pmfs followed by the degenerate corners.
        """
        pmfs = [tuple(float(p) for p in pmf) for pmf in self.rng().dirichlet((1.0, 1.0, 1.0), self.samples(1000))]
        # dirichlet rows may miss 1 by a few ulps
        pmfs = [(p0, p1, max(1.0 - p0 - p1, 0.0)) for p0, p1, _ in pmfs if p0 + p1 <= 1.0]
        pmfs.extend([(1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.5, 0.5), (0.5, 0.5, 0.0)])

        return pmfs

    @classmethod
    def __groupedEntropy(cls, p0, p1, p2):
        if p0 >= 1.0:
            return h(p0)

        return h(p0) + (1.0 - p0) * h(min(p1 / (1.0 - p0), 1.0))


# registering suite
Suite.register(
    'entropy',
    EntropySuite
)
