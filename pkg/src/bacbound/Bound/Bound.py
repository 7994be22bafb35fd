from ..Optimizer import OptimizerConfig, ScalarOptimizer
from .RatePoint import RatePoint, BoundError, BoundDomainError

class BoundNotRegisteredError(BoundError):
    """Bound not registered error."""

class Bound(object):
    """
    Abstract upper bound on R2 as a function of R1.

    Implementations compute the raw bound through _compute, the value returned
    by value is clamped to [0, 1] (R2 is a rate in bits per element).
    """

    __registered = {}
    __slack = 1e-12

    def __init__(self, name, config=None):
        """
        Create a bound object.
        """
        if config is None:
            config = OptimizerConfig()

        assert isinstance(config, OptimizerConfig), "Invalid config type!"

        self.__name = name
        self.__config = config
        self.__optimizer = ScalarOptimizer(config)

    def name(self):
        """
        Return the name the bound was registered with.
        """
        return self.__name

    def config(self):
        """
        Return the optimizer config used by the bound.
        """
        return self.__config

    def optimizer(self):
        """
        Return the scalar optimizer used by the bound.
        """
        return self.__optimizer

    def value(self, r1):
        """
        Return the upper bound on R2 for the input R1.
        """
        r1 = float(r1)
        if not (-self.__slack <= r1 <= 1.0 + self.__slack):
            raise BoundDomainError(
                'Rate "r1" must be in [0, 1], got {}'.format(r1)
            )

        return min(max(float(self._compute(min(max(r1, 0.0), 1.0))), 0.0), 1.0)

    def sumValue(self, r1):
        """
        Return the bound expressed on the sum R1 + R2.
        """
        return float(r1) + self.value(r1)

    def admits(self, ratePoint, tolerance=1e-9):
        """
        Return a boolean telling if the rate point is not excluded by the bound.
        """
        assert isinstance(ratePoint, RatePoint), "Invalid rate point type!"
        return ratePoint.r2() <= self.value(ratePoint.r1()) + tolerance

    def _compute(self, r1):
        """
        For re-implementation: return the raw bound for R1 in [0, 1].
        """
        raise NotImplementedError

    @classmethod
    def register(cls, name, boundClass):
        """
        Register a bound type.
        """
        assert issubclass(boundClass, Bound), \
            "Invalid bound class!"

        cls.__registered[name] = boundClass

    @classmethod
    def registeredNames(cls):
        """
        Return a list of registered bound names.
        """
        return list(cls.__registered.keys())

    @classmethod
    def create(cls, name, config=None):
        """
        Create a bound object.
        """
        if name not in cls.__registered:
            raise BoundNotRegisteredError(
                'Bound is not registered: "{0}"'.format(
                    name
                )
            )

        return cls.__registered[name](name, config)
