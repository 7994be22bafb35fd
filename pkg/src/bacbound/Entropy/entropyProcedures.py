"""
Scalar entropy primitives.

All logarithms are taken in base 2. The functions accept python floats and
numpy arrays (evaluated element-wise), returning a float for scalar input.
Probabilities that fall outside of [0, 1] by no more than the float slack are
clamped, larger violations raise EntropyDomainError.
"""

import math
import numpy as np
from ..BacBoundError import BacBoundError

class EntropyError(BacBoundError):
    """Entropy error."""

class EntropyDomainError(EntropyError):
    """Entropy domain error."""

class EntropyInvalidPmfError(EntropyError):
    """Entropy invalid pmf error."""

slack = 1e-12
hInvTolerance = 1e-12
hInvMaxIterations = 200
pmfTolerance = 1e-12

def isScalar(value):
    """
    Return a boolean telling if the input is a scalar (rather than an array).
    """
    return np.ndim(value) == 0

def clampProbability(p, name='p'):
    """
    Return the probability clamped to [0, 1].

    Values outside of the interval beyond the slack raise EntropyDomainError.
    """
    if isScalar(p):
        p = float(p)
        if not (-slack <= p <= 1.0 + slack):
            raise EntropyDomainError(
                'Probability "{}" is outside of [0, 1]: {}'.format(name, p)
            )
        return min(max(p, 0.0), 1.0)

    values = np.asarray(p, dtype=float)
    if np.any(values < -slack) or np.any(values > 1.0 + slack) or np.any(np.isnan(values)):
        raise EntropyDomainError(
            'Probability "{}" is outside of [0, 1]'.format(name)
        )
    return np.clip(values, 0.0, 1.0)

def h(p):
    """
    Binary entropy h(p) = -p log p - (1-p) log(1-p), with 0 log 0 = 0.
    """
    p = clampProbability(p)

    if isScalar(p):
        if p <= 0.0 or p >= 1.0:
            return 0.0
        return -p * math.log2(p) - (1.0 - p) * math.log2(1.0 - p)

    with np.errstate(divide='ignore', invalid='ignore'):
        result = -p * np.log2(p) - (1.0 - p) * np.log2(1.0 - p)
    return np.where((p <= 0.0) | (p >= 1.0), 0.0, result)

def hInv(x):
    """
    Inverse of the binary entropy restricted to [0, 1/2], computed by bisection.
    """
    x = float(x)
    if not (-slack <= x <= 1.0 + slack):
        raise EntropyDomainError(
            'Entropy value outside of [0, 1]: {}'.format(x)
        )

    x = min(max(x, 0.0), 1.0)
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 0.5

    # h is increasing over [0, 1/2]
    low = 0.0
    high = 0.5
    for _ in range(hInvMaxIterations):
        middle = 0.5 * (low + high)
        value = h(middle)
        if abs(value - x) <= hInvTolerance and high - low <= hInvTolerance:
            break

        if value < x:
            low = middle
        else:
            high = middle

        if high - low <= 1e-17:
            break

    return 0.5 * (low + high)

def entropy(masses):
    """
    Shannon entropy (bits) of a probability mass function.
    """
    values = np.asarray(masses, dtype=float)
    if values.ndim != 1 or values.size == 0:
        raise EntropyInvalidPmfError(
            'Invalid pmf shape: {}'.format(values.shape)
        )

    if np.any(values < 0.0) or np.any(np.isnan(values)):
        raise EntropyInvalidPmfError(
            'Pmf contains negative masses: {}'.format(list(values))
        )

    if abs(float(values.sum()) - 1.0) > pmfTolerance:
        raise EntropyInvalidPmfError(
            'Pmf masses do not sum to 1: {}'.format(float(values.sum()))
        )

    positive = values[values > 0.0]
    return float(-(positive * np.log2(positive)).sum())

def star(p, q):
    """
    Binary convolution p(1-q) + q(1-p).
    """
    p = clampProbability(p, 'p')
    q = clampProbability(q, 'q')
    return p * (1.0 - q) + q * (1.0 - p)

def columnEntropy(masses):
    """
    Entropy (bits) of every column of a 2-D array whose columns are pmfs.

    Columns are not checked to sum to one, a 1-D input is treated as a single pmf.
    """
    masses = np.asarray(masses, dtype=float)
    with np.errstate(divide='ignore', invalid='ignore'):
        terms = np.where(masses > 0.0, -masses * np.log2(masses), 0.0)

    result = terms.sum(axis=0)
    if result.ndim == 0:
        return float(result)
    return result
