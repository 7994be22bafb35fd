import sys
from .BacBoundError import BacBoundError
from .Config import Config, ConfigError, ConfigKeyError, ConfigInvalidFileError
from . import Entropy
from . import Optimizer
from . import Bound
from . import Family
from . import System
from . import Distribution
from . import Loader
from . import Reporter
from . import Verification
from .Cli import Cli, CliError

# initialize cli support
def init():
    """
    Initialize bacbound cli.
    """
    sys.exit(
        Cli().run(
            sys.argv[1:]
        )
    )
