import numpy as np
from ..BacBoundError import BacBoundError
from ..Optimizer import OptimizerConfig
from .CheckResult import CheckResult

class VerificationError(BacBoundError):
    """Verification error."""

class SuiteNotRegisteredError(VerificationError):
    """Suite not registered error."""

class Suite(object):
    """
    Abstracted verification suite.

    A suite runs a list of checks returning CheckResult objects. Random samples
    come from a numpy generator seeded by the suite seed, sample counts are
    multiplied by the scale (at least one sample is always taken).
    """

    __registered = {}
    __order = []
    quickScale = 0.1

    def __init__(self, seed=0, scale=1.0, config=None):
        """
        Create a suite object.
        """
        if config is None:
            config = OptimizerConfig()

        assert isinstance(config, OptimizerConfig), "Invalid config type!"

        if not scale > 0.0:
            raise VerificationError(
                'Sample scale must be positive, got "{}"'.format(scale)
            )

        self.__seed = int(seed)
        self.__scale = float(scale)
        self.__config = config
        self.__rng = np.random.default_rng(self.__seed)

    def seed(self):
        """
        Return the seed of the random generator.
        """
        return self.__seed

    def scale(self):
        """
        Return the sample scale.
        """
        return self.__scale

    def config(self):
        """
        Return the optimizer config used by checks evaluating bounds.
        """
        return self.__config

    def rng(self):
        """
        Return the random generator of the suite.
        """
        return self.__rng

    def samples(self, count):
        """
        Return the scaled number of samples.
        """
        return max(int(round(count * self.__scale)), 1)

    def run(self):
        """
        Return the list of CheckResult objects of the suite.
        """
        return [check() for check in self.checks()]

    def checks(self):
        """
        For re-implementation: return the list of callables producing a CheckResult each.
        """
        raise NotImplementedError

    @classmethod
    def result(cls, name, violations, tolerance=0.0):
        """
        Return a CheckResult from a sequence of violations (positive means violated).
        """
        violations = list(violations)
        return CheckResult(
            name,
            len(violations),
            max(max(violations), 0.0) if violations else 0.0,
            tolerance
        )

    @classmethod
    def register(cls, name, suiteClass):
        """
        Register a suite type.
        """
        assert issubclass(suiteClass, Suite), \
            "Invalid suite class!"

        if name not in cls.__registered:
            cls.__order.append(name)
        cls.__registered[name] = suiteClass

    @classmethod
    def registeredNames(cls):
        """
        Return a list of registered suite names (in registration order).
        """
        return list(cls.__order)

    @classmethod
    def create(cls, name, *args, **kwargs):
        """
        Create a suite object.
        """
        if name not in cls.__registered:
            raise SuiteNotRegisteredError(
                'Suite is not registered: "{0}"'.format(
                    name
                )
            )

        return cls.__registered[name](*args, **kwargs)
