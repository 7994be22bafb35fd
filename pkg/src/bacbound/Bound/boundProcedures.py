"""
Functional access to the registered bounds.
"""

from .Bound import Bound

def simpleBound(r1):
    """
    Return 3/2 - R1 clamped to [0, 1].
    """
    return Bound.create('simple').value(r1)

def weldonBound(r1):
    """
    Return (1 - R1) log 3 clamped to [0, 1].
    """
    return Bound.create('weldon').value(r1)

def weldonNonsystematicBound(r1):
    """
    Return (1 - hInv(R1)) log 3 clamped to [0, 1].
    """
    return Bound.create('weldonNonsystematic').value(r1)

def gStar(rho, config=None):
    """
    Return the maximal ternary entropy used by the urbanke-li bound.
    """
    return Bound.create('ul', config).gStar(rho)

def ulBound(r1, config=None):
    """
    Return the R2 implied by the urbanke-li sum bound.
    """
    return Bound.create('ul', config).value(r1)

def mainBound(r1, config=None):
    """
    Return the main bound on R2.
    """
    return Bound.create('main', config).value(r1)
