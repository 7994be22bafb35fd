"""
Checks of serialized objects (systems and family pairs).
"""

import math
from .Suite import Suite
from ..Family import Family, isMultisetUnionFree
from ..System import UnionFreeSystem
from ..Distribution import AuxBinaryJoint

def verifySystem(system):
    """
    Return the CheckResult list of a union-free system.
    """
    assert isinstance(system, UnionFreeSystem), "Invalid system type!"

    rates = system.rates()
    triplet = AuxBinaryJoint.fromSystem(system).entropyTriplet()
    return [
        Suite.result('system.valid', [0.0 if system.isValid() else 1.0]),
        Suite.result('system.sumRate', [rates.sum() - math.log2(3.0)], 1e-9),
        Suite.result(
            'system.regionSoundness',
            [
                rates.sum() - triplet.hs(),
                rates.r1() + rates.r2() - triplet.hsCond(),
                rates.r1() - triplet.h1Cond()
            ],
            1e-9
        )
    ]

def verifyPair(f1, f2):
    """
    Return the CheckResult list of a family pair.
    """
    assert isinstance(f1, Family) and isinstance(f2, Family), "Invalid family type!"

    return [
        Suite.result('pair.unionFree', [0.0 if isMultisetUnionFree(f1, f2) else 1.0]),
        Suite.result('pair.product', [f1.size() * f2.size() - 3 ** f1.n()])
    ]
