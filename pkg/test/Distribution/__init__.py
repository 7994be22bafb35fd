from .AuxBinaryJointTest import AuxBinaryJointTest
from .RegionProceduresTest import RegionProceduresTest
