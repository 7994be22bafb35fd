import numpy as np
from .Suite import Suite
from ..Entropy import h, hInv
from ..Bound import J, L, pStar
from ..Distribution import AuxBinaryJoint, F, G, Q, maxSecondMoment, extremalSecondMomentPoints
from ..Distribution import entropyBoundJ, attainabilityThreshold

class DistributionsSuite(Suite):
    """
    Checks of the entropy region functions and of the extremal distributions.
    """

    maxSupportSize = 4

    def checks(self):
        """
        Implement the distribution checks.
        """
        return [
            self.fSymmetry,
            self.fConcavity,
            self.gShape,
            self.qShape,
            self.secondMomentTightness,
            self.secondMomentBound,
            self.crossoverFeasibility,
            self.symmetrization,
            self.attainability,
            self.entropyBoundChain
        ]

    def fSymmetry(self):
        """
        F(y, z) = F(z, y).
        """
        points = self.rng().uniform(0.0, 1.0, (self.samples(10000), 2))
        return self.result(
            'distributions.fSymmetry',
            (abs(F(y, z) - F(z, y)) for y, z in points),
            1e-12
        )

    def fConcavity(self):
        """
        F(w x + (1 - w) x') >= w F(x) + (1 - w) F(x') on the unit square.
        """
        violations = []
        for _ in range(self.samples(10000)):
            first = self.rng().uniform(0.0, 1.0, 2)
            second = self.rng().uniform(0.0, 1.0, 2)
            weight = float(self.rng().uniform())
            middle = weight * first + (1.0 - weight) * second
            violations.append(
                weight * F(*first) + (1.0 - weight) * F(*second) - F(*middle)
            )

        return self.result('distributions.fConcavity', violations, 1e-12)

    def gShape(self):
        """
        G is concave and decreasing over [0, 1/4].
        """
        return self.result(
            'distributions.gShape',
            self.__shapeViolations(G, decreasing=True),
            1e-12
        )

    def qShape(self):
        """
        Q is concave over [0, 1/4].
        """
        return self.result(
            'distributions.qShape',
            self.__shapeViolations(Q, decreasing=False),
            1e-12
        )

    def secondMomentTightness(self):
        """
        The two-point law on +-(1/2 - hInv(rho)) attains the second moment bound.
        """
        violations = []
        for rho in np.linspace(0.0, 1.0, 101):
            first, second = extremalSecondMomentPoints(float(rho))
            moment = 0.5 * first ** 2 + 0.5 * second ** 2
            entropyMean = 0.5 * h(first + 0.5) + 0.5 * h(second + 0.5)
            violations.append(abs(moment - maxSecondMoment(float(rho))))
            violations.append(abs(entropyMean - float(rho)))

        return self.result('distributions.secondMomentTightness', violations, 1e-9)

    def secondMomentBound(self):
        """
        A zero mean X on [-1/2, 1/2] has E X^2 <= maxSecondMoment(E h(X + 1/2)).
        """
        violations = []
        for _ in range(self.samples(1000)):
            values, masses = self.__zeroMeanLaw()
            rho = float(masses @ h(values + 0.5))
            violations.append(float(masses @ values ** 2) - maxSecondMoment(rho))

        return self.result('distributions.secondMomentBound', violations, 1e-10)

    def crossoverFeasibility(self):
        """
        Symmetric joints have Pr(X1 != X2) >= hInv(H(X1 | U)).
        """
        violations = []
        for _ in range(self.samples(1000)):
            joint = self.__randomJoint().symmetrize()
            r1 = joint.entropyTriplet().h1Cond()
            violations.append(hInv(min(r1, 1.0)) - joint.crossoverProbability())

        return self.result('distributions.crossoverFeasibility', violations, 1e-9)

    def symmetrization(self):
        """
        Symmetrization keeps the conditional entropies and the crossover, never decreases H(X1 + X2).
        """
        violations = []
        for _ in range(self.samples(1000)):
            joint = self.__randomJoint()
            symmetric = joint.symmetrize()
            before = joint.entropyTriplet()
            after = symmetric.entropyTriplet()
            violations.extend([
                abs(before.hsCond() - after.hsCond()),
                abs(before.h1Cond() - after.h1Cond()),
                abs(joint.crossoverProbability() - symmetric.crossoverProbability()),
                abs(symmetric.marginalX1() - 0.5),
                before.hs() - after.hs()
            ])

        return self.result('distributions.symmetrization', violations, 1e-12)

    def attainability(self):
        """
        Above hInv(r1) * hInv(r1) the distribution built from p* attains J.
        """
        violations = []
        for _ in range(self.samples(100)):
            r1 = float(self.rng().uniform())
            eta = float(self.rng().uniform(attainabilityThreshold(r1), 0.5))
            triplet = AuxBinaryJoint.optDist(eta).entropyTriplet()
            violations.extend([
                abs(triplet.hsCond() - J(hInv(r1), eta)),
                abs(triplet.hs() - L(eta)),
                abs(triplet.h1Cond() - h(pStar(eta))),
                r1 - triplet.h1Cond()
            ])

        return self.result('distributions.attainability', violations, 1e-9)

    def entropyBoundChain(self):
        """
        The second moment chain reproduces J for every feasible crossover.
        """
        violations = []
        for _ in range(self.samples(1000)):
            r1 = float(self.rng().uniform())
            eta = float(self.rng().uniform(hInv(r1), 0.5))
            violations.append(abs(entropyBoundJ(r1, eta) - J(hInv(r1), eta)))

        return self.result('distributions.entropyBoundChain', violations, 1e-9)

    def __randomJoint(self):
        """
        Return a random joint with a random support size.
        """
        return AuxBinaryJoint.random(int(self.rng().integers(1, self.maxSupportSize + 1)), self.rng())

    def __zeroMeanLaw(self):
        """
        Return (values, masses) of a random zero mean law over [-1/2, 1/2].
        """
        size = int(self.rng().integers(1, 5))
        values = self.rng().uniform(-0.5, 0.5, size)
        masses = self.rng().dirichlet(np.ones(size))

        # an atom at the opposite end cancels the mean
        mean = float(masses @ values)
        endpoint = -0.5 if mean > 0.0 else 0.5
        weight = 2.0 * abs(mean)
        values = np.append(values, endpoint)
        masses = np.append(masses, weight) / (1.0 + weight)

        return (values, masses)

    @classmethod
    def __shapeViolations(cls, func, decreasing):
        """
        Return the concavity (and monotonicity) violations over a 1000 point grid of [0, 1/4].
        """
        values = np.array([func(float(y)) for y in np.linspace(0.0, 0.25, 1000)])
        violations = list(values[:-2] + values[2:] - 2.0 * values[1:-1])
        if decreasing:
            violations.extend(values[1:] - values[:-1])

        return [float(value) for value in violations]


# registering suite
Suite.register(
    'distributions',
    DistributionsSuite
)
