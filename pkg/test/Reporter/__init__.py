from .ReporterTest import ReporterTest
