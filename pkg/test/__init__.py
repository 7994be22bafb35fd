from .BaseTestCase import BaseTestCase
from .CliTest import CliTest
from .ConfigTest import ConfigTest
from . import Entropy
from . import Optimizer
from . import Bound
from . import Family
from . import System
from . import Distribution
from . import Loader
from . import Reporter
from . import Verification
