from .SuiteTest import SuiteTest
from .ObjectProceduresTest import ObjectProceduresTest
