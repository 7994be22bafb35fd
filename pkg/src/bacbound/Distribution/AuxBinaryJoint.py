import numpy as np
from ..Entropy import columnEntropy
from ..Bound import pStar
from .EntropyTriplet import EntropyTriplet, DistributionError, DistributionInvalidJointError

class DistributionDomainError(DistributionError):
    """Distribution domain error."""

class AuxBinaryJoint(object):
    """
    Joint law of (U, X1, X2) where X1 and X2 are binary and independent given U.

    The law is given by the masses of U over [m] and the per-u probabilities
    t[u] = Pr(X1 = 1 | U = u) and q[u] = Pr(X2 = 1 | U = u).
    """

    __massTolerance = 1e-9

    def __init__(self, uMasses, t, q):
        """
        Create a joint distribution object.
        """
        uMasses = np.asarray(uMasses, dtype=float).ravel()
        t = np.asarray(t, dtype=float).ravel()
        q = np.asarray(q, dtype=float).ravel()

        if uMasses.size == 0 or uMasses.shape != t.shape or uMasses.shape != q.shape:
            raise DistributionInvalidJointError(
                'Support sizes do not match: masses {}, t {}, q {}'.format(uMasses.size, t.size, q.size)
            )

        if np.any(uMasses < 0.0) or abs(float(uMasses.sum()) - 1.0) > self.__massTolerance:
            raise DistributionInvalidJointError(
                'Masses of U are not a pmf (sum {})'.format(float(uMasses.sum()))
            )

        for name, values in (('t', t), ('q', q)):
            if np.any(values < 0.0) or np.any(values > 1.0) or np.any(np.isnan(values)):
                raise DistributionInvalidJointError(
                    'Conditional probabilities "{}" must be in [0, 1]'.format(name)
                )

        self.__uMasses = uMasses
        self.__t = t
        self.__q = q

    def uMasses(self):
        """
        Return the masses of U.
        """
        return self.__uMasses.copy()

    def t(self):
        """
        Return Pr(X1 = 1 | U = u) for every u.
        """
        return self.__t.copy()

    def q(self):
        """
        Return Pr(X2 = 1 | U = u) for every u.
        """
        return self.__q.copy()

    def supportSize(self):
        """
        Return the size of the support of U.
        """
        return self.__uMasses.size

    def sumMasses(self):
        """
        Return a 3 x m array with Pr(X1 + X2 = s | U = u) for s = 0, 1, 2.
        """
        a = 1.0 - self.__t
        b = 1.0 - self.__q
        return np.stack((
            a * b,
            a * (1.0 - b) + b * (1.0 - a),
            self.__t * self.__q
        ))

    def entropyTriplet(self):
        """
        Return the EntropyTriplet of the distribution.
        """
        conditional = self.sumMasses()
        marginal = conditional @ self.__uMasses

        return EntropyTriplet(
            columnEntropy(marginal / marginal.sum()),
            float(columnEntropy(conditional) @ self.__uMasses),
            float(columnEntropy(np.stack((self.__t, 1.0 - self.__t))) @ self.__uMasses)
        )

    def crossoverProbability(self):
        """
        Return Pr(X1 != X2).
        """
        return float(self.sumMasses()[1] @ self.__uMasses)

    def marginalX1(self):
        """
        Return Pr(X1 = 1).
        """
        return float(self.__t @ self.__uMasses)

    def marginalX2(self):
        """
        Return Pr(X2 = 1).
        """
        return float(self.__q @ self.__uMasses)

    def symmetrize(self):
        """
        Return the distribution over the doubled support with flipped copies.

        Every u gets a mirror carrying half of its mass where both X1 and X2 are
        complemented. Conditional entropies and Pr(X1 != X2) are kept, X1 becomes
        uniform and H(X1 + X2) does not decrease.
        """
        return AuxBinaryJoint(
            np.concatenate((self.__uMasses, self.__uMasses)) / 2.0,
            np.concatenate((self.__t, 1.0 - self.__t)),
            np.concatenate((self.__q, 1.0 - self.__q))
        )

    def toDict(self):
        """
        Return the distribution as a dictionary.
        """
        return {
            'uMasses': self.__uMasses.tolist(),
            't': self.__t.tolist(),
            'q': self.__q.tolist()
        }

    @classmethod
    def optDist(cls, eta):
        """
        Return the distribution X1 = U + Z1, X2 = U + Z2 (mod 2) with U uniform and Z1, Z2 ~ Bern(p*).

        p* = (1 - sqrt(1 - 2 eta)) / 2 so Pr(X1 != X2) = eta.
        """
        eta = float(eta)
        if not (0.0 <= eta <= 0.5):
            raise DistributionDomainError(
                'Crossover "eta" must be in [0, 1/2], got "{}"'.format(eta)
            )

        p = pStar(eta)
        return cls([0.5, 0.5], [p, 1.0 - p], [p, 1.0 - p])

    @classmethod
    def fromSystem(cls, system):
        """
        Return the distribution of U = (V, Q) induced by a union-free system.

        V is a uniform pair index and Q a uniform coordinate. X1 (resp. X2) is
        coordinate Q of a uniform member of the first (resp. second) family of pair V.
        """
        n = system.n()
        t = []
        q = []
        for f1, f2 in system.pairs():
            for index in range(n):
                t.append(sum(member >> index & 1 for member in f1) / f1.size())
                q.append(sum(member >> index & 1 for member in f2) / f2.size())

        size = len(t)
        return cls(np.full(size, 1.0 / size), t, q)

    @classmethod
    def random(cls, supportSize, rng):
        """
        Return a random distribution (dirichlet masses, uniform conditionals).
        """
        return cls(
            rng.dirichlet(np.ones(supportSize)),
            rng.uniform(0.0, 1.0, supportSize),
            rng.uniform(0.0, 1.0, supportSize)
        )

    def __repr__(self):
        """
        Return a string representation of the distribution.
        """
        return 'AuxBinaryJoint(uMasses={}, t={}, q={})'.format(
            self.__uMasses.tolist(),
            self.__t.tolist(),
            self.__q.tolist()
        )
