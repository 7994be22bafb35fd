from .entropyProcedures import h, hInv, entropy, columnEntropy, star, clampProbability, isScalar
from .entropyProcedures import EntropyError, EntropyDomainError, EntropyInvalidPmfError
