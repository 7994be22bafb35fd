from .EntropyProceduresTest import EntropyProceduresTest
