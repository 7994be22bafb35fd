"""
Functions bounding the entropy region of (X1 + X2, X1) given an auxiliary U.

With a = Pr(X1 = 0 | U) and b = Pr(X2 = 0 | U), H(X1 + X2 | U) = E F(a, b). F is
concave, so symmetrizing a and b and applying the concave G to a lower bound of
the second moment of a + b gives the entropyBoundJ chain.
"""

import math
from ..Entropy import h, hInv, star
from .EntropyTriplet import DistributionError
from .AuxBinaryJoint import DistributionDomainError

class DistributionInfeasibleEtaError(DistributionError):
    """Distribution infeasible eta error."""

slack = 1e-12

def F(y, z):
    """
    Return h(y) + h(z) - (y * z) h(y (1 - z) / (y * z)), where * is the binary convolution.

    The last term is zero when y * z vanishes.
    """
    convolution = star(y, z)
    if convolution <= 0.0:
        return h(y) + h(z)

    return h(y) + h(z) - convolution * h(min(y * (1.0 - z) / convolution, 1.0))

def G(y):
    """
    Return h(sqrt(y) + 1/2) + y for y in [0, 1/4].
    """
    y = __checkQuarter(y)
    return h(min(math.sqrt(y) + 0.5, 1.0)) + y

def Q(y):
    """
    Return h(1/2 - sqrt(y)) for y in [0, 1/4].
    """
    y = __checkQuarter(y)
    return h(max(0.5 - math.sqrt(y), 0.0))

def lambdaStar(mu, maxEx2):
    """
    Return max{mu / maxEx2, 1}.
    """
    mu = float(mu)
    maxEx2 = float(maxEx2)
    if mu < 0.0:
        raise DistributionDomainError(
            'Correlation "mu" must be non-negative, got "{}"'.format(mu)
        )

    if not maxEx2 > 0.0:
        raise DistributionDomainError(
            'Second moment bound must be positive, got "{}"'.format(maxEx2)
        )

    return max(mu / maxEx2, 1.0)

def maxSecondMoment(rho):
    """
    Return (1/2 - hInv(rho))^2, the largest E X^2 of a zero mean X on [-1/2, 1/2] with E h(X + 1/2) >= rho.
    """
    return (0.5 - hInv(rho)) ** 2

def extremalSecondMomentPoints(rho):
    """
    Return the two equally likely values attaining maxSecondMoment.
    """
    radius = 0.5 - hInv(rho)
    return (radius, -radius)

def correlationBound(rho):
    """
    Return (1/2)(1/2 - hInv(rho)), the largest E[(a - 1/2)(b - 1/2)] when E h(a) >= rho.

    Since E[(a - 1/2)(b - 1/2)] = (1/2 - eta) / 2 this gives eta >= hInv(rho).
    """
    return 0.5 * (0.5 - hInv(rho))

def entropyBoundJ(r1, eta):
    """
    Return -1/2 + 2 G((E(a + b)^2 - 1) / 4) with E(a + b)^2 replaced by its lower bound.

    The lower bound is 1 + (1 + l)^2 / (2 l) (1/2 - eta) with l the lambdaStar of
    mu = 1/4 - eta / 2 and maxEx2 = maxSecondMoment(r1).
    """
    eta = float(eta)
    if not (0.0 <= eta <= 0.5 + slack):
        raise DistributionDomainError(
            'Crossover "eta" must be in [0, 1/2], got "{}"'.format(eta)
        )

    eta = min(eta, 0.5)
    p = hInv(r1)
    if eta < p - slack:
        raise DistributionInfeasibleEtaError(
            'Crossover {} is below hInv(r1) = {}'.format(eta, p)
        )

    maxEx2 = maxSecondMoment(r1)
    mu = 0.25 - 0.5 * eta
    if maxEx2 <= slack:
        factor = 1.0
    else:
        factor = lambdaStar(mu, maxEx2)

    secondMoment = 1.0 + (1.0 + factor) ** 2 / (2.0 * factor) * (0.5 - eta)
    return -0.5 + 2.0 * G(min(max((secondMoment - 1.0) / 4.0, 0.0), 0.25))

def attainabilityThreshold(r1):
    """
    Return hInv(r1) * hInv(r1), the crossover above which entropyBoundJ is attained.
    """
    p = hInv(r1)
    return star(p, p)

def __checkQuarter(y):
    """
    Return y clamped to [0, 1/4], raising DistributionDomainError beyond the slack.
    """
    y = float(y)
    if not (-slack <= y <= 0.25 + slack):
        raise DistributionDomainError(
            'Argument must be in [0, 1/4], got "{}"'.format(y)
        )

    return min(max(y, 0.0), 0.25)
