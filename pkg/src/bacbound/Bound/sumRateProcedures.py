"""
Sum-rate functions of multiset-union-free systems.

L(eta) is the entropy of X1 + X2 for a doubly symmetric binary pair with
crossover eta, J(p, eta) caps the conditional entropy of the sum given the
auxiliary variable and rSigma(r0, r1) is the resulting bound on r0 + r1 + r2.
"""

import math
import numpy as np
from ..Entropy import h, hInv, star, isScalar
from ..Optimizer import ScalarOptimizer
from .RatePoint import BoundDomainError

slack = 1e-12

def checkRange(value, lo, hi, name):
    """
    Return the value clamped to [lo, hi], raising BoundDomainError beyond the slack.
    """
    if isScalar(value):
        value = float(value)
        if not (lo - slack <= value <= hi + slack):
            raise BoundDomainError(
                'Argument "{}" must be in [{}, {}], got {}'.format(name, lo, hi, value)
            )
        return min(max(value, lo), hi)

    values = np.asarray(value, dtype=float)
    if np.any(values < lo - slack) or np.any(values > hi + slack) or np.any(np.isnan(values)):
        raise BoundDomainError(
            'Argument "{}" must be in [{}, {}]'.format(name, lo, hi)
        )
    return np.clip(values, lo, hi)

def pStar(eta):
    """
    Return p <= 1/2 such that p * p = eta, i.e. (1 - sqrt(1 - 2 eta)) / 2.
    """
    eta = checkRange(eta, 0.0, 0.5, 'eta')
    if isScalar(eta):
        return 0.5 * (1.0 - math.sqrt(max(1.0 - 2.0 * eta, 0.0)))
    return 0.5 * (1.0 - np.sqrt(np.maximum(1.0 - 2.0 * eta, 0.0)))

def L(eta):
    """
    Entropy of X1 + X2 under crossover eta: h(eta) + 1 - eta.
    """
    eta = checkRange(eta, 0.0, 0.5, 'eta')
    return h(eta) + 1.0 - eta

def J(p, eta):
    """
    Upper bound on H(X1 + X2 | U) for crossover eta and H(X1 | U) >= h(p).

    The first branch (eta >= p * p) is attained, the second branch applies
    below the threshold. Both agree at eta = p * p.
    """
    assert isScalar(p), "p must be a scalar"
    p = checkRange(p, 0.0, 0.5, 'p')
    eta = checkRange(eta, 0.0, 0.5, 'eta')
    threshold = star(p, p)
    denominator = 1.0 - 2.0 * p
    if isScalar(eta):
        if eta >= threshold or denominator <= slack:
            return attainedBranch(eta)
        return float(lowerBranch(p, eta))

    result = attainedBranch(eta)
    if denominator > slack:
        below = eta < threshold
        if np.any(below):
            result = np.array(result, dtype=float)
            result[below] = lowerBranch(p, eta[below])

    return result

def rSigma(r0, r1, config=None):
    """
    Return max over eta in [hInv(r1), 1/2] of min{L(eta), J(hInv(r1), eta) + r0}.
    """
    r0 = float(r0)
    if r0 < -slack:
        raise BoundDomainError(
            'Rate "r0" must be non-negative, got {}'.format(r0)
        )

    r1 = checkRange(r1, 0.0, 1.0, 'r1')
    return rSigmaFromProbability(max(r0, 0.0), hInv(r1), ScalarOptimizer(config))

def rSigmaFromProbability(r0, p, optimizer):
    """
    Same as rSigma where the entropy constraint is passed already inverted (p = hInv(r1)).
    """
    p = min(max(float(p), 0.0), 0.5)

    def objective(eta):
        return np.minimum(L(eta), J(p, eta) + r0)

    return optimizer.maximize(objective, p, 0.5, vectorized=True)[1]

def gamma(r1, alpha):
    """
    Return h((hInv(r1) - alpha) / (1 - alpha)) for 0 <= alpha <= hInv(r1).
    """
    r1 = checkRange(r1, 0.0, 1.0, 'r1')
    return gammaFromProbability(hInv(r1), alpha)

def gammaFromProbability(p, alpha):
    """
    Same as gamma where hInv(r1) is passed already computed.
    """
    alpha = float(alpha)
    if alpha < -slack or alpha > p + slack:
        raise BoundDomainError(
            'Argument "alpha" must be in [0, {}], got {}'.format(p, alpha)
        )

    alpha = min(max(alpha, 0.0), p)
    return h(max(p - alpha, 0.0) / (1.0 - alpha))

def attainedBranch(eta):
    """
    2 h((1 - sqrt(1 - 2 eta)) / 2) - eta.
    """
    return 2.0 * h(pStar(eta)) - eta

def lowerBranch(p, eta):
    """
    Branch used when eta is below p * p (requires p < 1/2).
    """
    # sqrt(1 - 2 p*p) = 1 - 2p
    ratio = (1.0 - eta - star(p, p)) / (1.0 - 2.0 * p)
    return 2.0 * h(0.5 * (1.0 - ratio)) - 0.5 * (1.0 - ratio * ratio)
