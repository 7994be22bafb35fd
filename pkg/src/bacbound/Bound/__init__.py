from .RatePoint import RatePoint, BoundError, BoundDomainError
from .RateTriple import RateTriple
from .sumRateProcedures import L, J, attainedBranch, lowerBranch, pStar, rSigma, rSigmaFromProbability, gamma, gammaFromProbability
from .Bound import Bound, BoundNotRegisteredError
from .SimpleBound import SimpleBound
from .WeldonBound import WeldonBound
from .WeldonNonsystematicBound import WeldonNonsystematicBound
from .UrbankeLiBound import UrbankeLiBound
from .MainBound import MainBound
from .BoundCurve import BoundCurve, BoundCurveError, curve
from .boundProcedures import simpleBound, weldonBound, weldonNonsystematicBound, gStar, ulBound, mainBound
