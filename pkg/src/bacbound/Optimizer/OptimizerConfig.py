from ..BacBoundError import BacBoundError

class OptimizerError(BacBoundError):
    """Optimizer error."""

class OptimizerConfigError(OptimizerError):
    """Optimizer config error."""

class OptimizerConfig(object):
    """
    Settings used by the scalar optimizer.

    - gridPoints: number of points in the dense grid of a single maximization
    - refineIters: maximum number of golden-section iterations per candidate
    - tol: bracket width where the golden-section refinement stops
    - outerGridPoints: grid used by the outer minimization of min-max problems
    """

    defaultGridPoints = 4096
    defaultRefineIters = 64
    defaultTol = 1e-7
    defaultOuterGridPoints = 1024

    def __init__(
            self,
            gridPoints=defaultGridPoints,
            refineIters=defaultRefineIters,
            tol=defaultTol,
            outerGridPoints=defaultOuterGridPoints):
        """
        Create an optimizer config object.
        """
        try:
            gridPoints = int(gridPoints)
            refineIters = int(refineIters)
            outerGridPoints = int(outerGridPoints)
            tol = float(tol)
        except (TypeError, ValueError) as err:
            raise OptimizerConfigError(
                'Invalid optimizer setting: {}'.format(err)
            )

        if gridPoints < 64:
            raise OptimizerConfigError(
                'Grid points must be at least 64, got "{}"'.format(gridPoints)
            )

        if refineIters < 1:
            raise OptimizerConfigError(
                'Refine iterations must be positive, got "{}"'.format(refineIters)
            )

        if not tol > 0.0:
            raise OptimizerConfigError(
                'Tolerance must be positive, got "{}"'.format(tol)
            )

        if outerGridPoints < 16:
            raise OptimizerConfigError(
                'Outer grid points must be at least 16, got "{}"'.format(outerGridPoints)
            )

        self.__gridPoints = gridPoints
        self.__refineIters = refineIters
        self.__tol = tol
        self.__outerGridPoints = outerGridPoints

    def gridPoints(self):
        """
        Return the number of points of the dense grid.
        """
        return self.__gridPoints

    def refineIters(self):
        """
        Return the maximum number of golden-section iterations.
        """
        return self.__refineIters

    def tol(self):
        """
        Return the refinement tolerance.
        """
        return self.__tol

    def outerGridPoints(self):
        """
        Return the number of grid points used by outer minimizations.
        """
        return self.__outerGridPoints

    def toDict(self):
        """
        Return the settings as a dictionary.
        """
        return {
            'gridPoints': self.gridPoints(),
            'refineIters': self.refineIters(),
            'tol': self.tol(),
            'outerGridPoints': self.outerGridPoints()
        }

    def updated(self, **kwargs):
        """
        Return a new config overriding the settings passed as keyword arguments.

        Keyword arguments set to None are ignored.
        """
        data = self.toDict()
        for key, value in kwargs.items():
            if key not in data:
                raise OptimizerConfigError(
                    'Invalid optimizer setting name "{}"'.format(key)
                )

            if value is not None:
                data[key] = value

        return OptimizerConfig(**data)

    @classmethod
    def fromDict(cls, data, base=None):
        """
        Create a config from a dictionary (unknown keys are rejected).
        """
        if not isinstance(data, dict):
            raise OptimizerConfigError(
                'Optimizer settings must be a mapping, got "{}"'.format(type(data).__name__)
            )

        if base is None:
            base = cls()

        return base.updated(**data)

    @classmethod
    def fromConfig(cls, config):
        """
        Create a config from the values persisted in a Config object.
        """
        data = {}
        for key in cls().toDict().keys():
            if config.hasKey(key):
                data[key] = config.value(key)

        return cls.fromDict(data)

    def __eq__(self, other):
        """
        Compare two configs by their settings.
        """
        return isinstance(other, OptimizerConfig) and self.toDict() == other.toDict()

    def __hash__(self):
        """
        Return a hash based on the settings.
        """
        return hash(tuple(sorted(self.toDict().items())))

    def __repr__(self):
        """
        Return a string representation of the config.
        """
        return 'OptimizerConfig({})'.format(
            ', '.join('{}={}'.format(key, value) for key, value in sorted(self.toDict().items()))
        )
