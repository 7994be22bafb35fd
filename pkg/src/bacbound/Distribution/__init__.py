from .EntropyTriplet import EntropyTriplet, DistributionError, DistributionInvalidJointError
from .AuxBinaryJoint import AuxBinaryJoint, DistributionDomainError
from .regionProcedures import F, G, Q, lambdaStar, maxSecondMoment, extremalSecondMomentPoints, correlationBound
from .regionProcedures import entropyBoundJ, attainabilityThreshold, DistributionInfeasibleEtaError
