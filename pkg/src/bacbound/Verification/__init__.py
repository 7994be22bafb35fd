from .CheckResult import CheckResult
from .Suite import Suite, VerificationError, SuiteNotRegisteredError
from .EntropySuite import EntropySuite
from .BoundsSuite import BoundsSuite
from .FamiliesSuite import FamiliesSuite
from .SystemsSuite import SystemsSuite
from .DistributionsSuite import DistributionsSuite
from .objectProcedures import verifySystem, verifyPair
