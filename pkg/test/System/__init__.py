from .UnionFreeSystemTest import UnionFreeSystemTest
from .SystemDerivationTest import SystemDerivationTest
