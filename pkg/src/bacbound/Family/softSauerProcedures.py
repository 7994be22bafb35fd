"""
Sauer-Perles-Shelah type bounds on the size of families.

Binomials are exact integers and the bounds are kept as Fraction objects,
float conversion is left to the caller.
"""

import math
from fractions import Fraction
from ..Entropy import h, hInv
from .GroundSet import FamilyError
from .SoftSauerParams import SoftSauerParams

class FamilyDomainError(FamilyError):
    """Family domain error."""

def softSauerBound(params):
    """
    Return the soft bound on the size of a monotone family where no d-set is k-shattered.

        sum_{t=1}^{t*} C(n, t) + C(n, t*) sum_{t=t*+1}^{n} C(t*, d) / C(t, d)
    """
    assert isinstance(params, SoftSauerParams), "Invalid params type!"

    n = params.n()
    d = params.d()
    top = params.threshold()

    result = Fraction(sum(math.comb(n, t) for t in range(1, top + 1)))
    tail = sum(Fraction(math.comb(top, d), math.comb(t, d)) for t in range(top + 1, n + 1))

    return result + math.comb(n, top) * tail

def softSauerLevelBound(params):
    """
    Return the level-by-level bound the soft bound is derived from.

        sum_{t=1}^{d-1} C(n, t) + sum_{t=d}^{n} min{C(n, t), C(n, d) k / C(t, d)}
    """
    assert isinstance(params, SoftSauerParams), "Invalid params type!"

    n = params.n()
    d = params.d()
    k = params.k()

    result = Fraction(sum(math.comb(n, t) for t in range(1, d)))
    for t in range(d, n + 1):
        result += min(Fraction(math.comb(n, t)), Fraction(math.comb(n, d) * k, math.comb(t, d)))

    return result

def sauerBound(n, d):
    """
    Return sum_{t=0}^{d} C(n, t), the size of the radius d hamming ball.
    """
    if not (0 <= d <= n):
        raise FamilyDomainError(
            'Sauer bound requires 0 <= d <= n, got n={} d={}'.format(n, d)
        )

    return sum(math.comb(n, t) for t in range(d + 1))

def corollaryShatterSize(rate, alpha, n):
    """
    Return a tuple (size, k) so a family of 2^(n rate) members k-shatters a set of that size.

    With beta = (1 - alpha) h((hInv(rate) - alpha) / (1 - alpha)) the result is
    (ceil(n alpha), ceil(2^(n beta))). Passing None as alpha uses hInv(rate).
    """
    rate = float(rate)
    if isinstance(n, bool) or int(n) != n or n < 0:
        raise FamilyDomainError(
            'Ground set size must be a non-negative integer, got "{}"'.format(n)
        )

    n = int(n)
    if not (0.0 <= rate <= 1.0):
        raise FamilyDomainError(
            'Rate must be in [0, 1], got "{}"'.format(rate)
        )

    p = hInv(rate)
    alpha = p if alpha is None else float(alpha)
    if alpha < 0.0 or alpha > p + 1e-12:
        raise FamilyDomainError(
            'Argument "alpha" must be in [0, {}], got "{}"'.format(p, alpha)
        )

    alpha = min(alpha, p)
    beta = (1.0 - alpha) * h(max(p - alpha, 0.0) / (1.0 - alpha))

    return (__ceil(n * alpha), __ceil(2.0 ** (n * beta)))

def __ceil(value):
    """
    Ceiling ignoring the float noise around an integer.
    """
    nearest = round(value)
    if abs(value - nearest) <= 1e-9 * max(1.0, abs(value)):
        return int(nearest)

    return int(math.ceil(value))
