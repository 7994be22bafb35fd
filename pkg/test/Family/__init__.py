from .GroundSetTest import GroundSetTest
from .FamilyTest import FamilyTest
from .FamilyProceduresTest import FamilyProceduresTest
from .SoftSauerTest import SoftSauerTest
from .PairSearchTest import PairSearchTest
