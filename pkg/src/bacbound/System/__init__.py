from .UnionFreeSystem import UnionFreeSystem, UnionFreeSystemError, UnionFreeSystemInvariantError, SystemConstructionError
from .SystemDerivation import SystemDerivation, SystemDerivationError, deriveSystem
