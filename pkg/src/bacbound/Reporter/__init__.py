from .Reporter import Reporter, ReporterError, ReporterNotRegisteredError
from .ColumnsReporter import ColumnsReporter
from .JsonReporter import JsonReporter
