from .SumRateProceduresTest import SumRateProceduresTest
from .BoundTest import BoundTest
from .UrbankeLiBoundTest import UrbankeLiBoundTest
from .MainBoundTest import MainBoundTest
from .BoundCurveTest import BoundCurveTest
