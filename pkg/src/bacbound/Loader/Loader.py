import os
from ..BacBoundError import BacBoundError

class LoaderError(BacBoundError):
    """Settings loader error."""

class LoaderNotRegisteredError(LoaderError):
    """Settings loader not registered error."""

class LoaderInvalidConfigError(LoaderError):
    """Settings loader invalid config error."""

class Loader(object):
    """
    Abstracted settings file loader.

    A settings file is a mapping with the optional sections "optimizer"
    (OptimizerConfig keys) and "verify" (seed, scale).
    """

    __registered = {}
    sections = ('optimizer', 'verify')

    def loadFromFile(self, filePath):
        """
        Return the settings (a dictionary of sections) stored in the file.
        """
        if not (os.path.exists(filePath) and os.path.isfile(filePath)):
            raise LoaderInvalidConfigError(
                'Invalid file "{0}"!'.format(filePath)
            )

        with open(filePath) as f:
            try:
                contents = self.parse(f.read())
            except Exception as err:
                raise LoaderInvalidConfigError(
                    '{} while loading file: {} ({})'.format(
                        err.__class__.__name__,
                        filePath,
                        err
                    )
                )

        return self.load(contents, filePath)

    def load(self, contents, filePath=''):
        """
        Return the validated settings from the parsed contents.
        """
        if contents is None:
            contents = {}

        if not isinstance(contents, dict):
            raise LoaderInvalidConfigError(
                'Settings must be a mapping: {}'.format(filePath)
            )

        for key, value in contents.items():
            if key not in self.sections:
                raise LoaderInvalidConfigError(
                    'Unknown settings section "{}" in {}'.format(key, filePath)
                )

            if not isinstance(value, dict):
                raise LoaderInvalidConfigError(
                    'Settings section "{}" must be a mapping in {}'.format(key, filePath)
                )

        return {section: dict(contents.get(section, {})) for section in self.sections}

    @classmethod
    def parse(cls, contents):
        """
        For re-implementation: should parse the contents to a python data-structure.
        """
        raise NotImplementedError

    @staticmethod
    def register(name, loader):
        """
        Register a loader type.
        """
        assert issubclass(loader, Loader), \
            "Invalid loader class!"

        Loader.__registered[name] = loader

    @staticmethod
    def registeredNames():
        """
        Return a list of registered loaders.
        """
        return list(Loader.__registered.keys())

    @staticmethod
    def create(loaderName, *args, **kwargs):
        """
        Create a loader object.
        """
        if loaderName not in Loader.__registered:
            raise LoaderNotRegisteredError(
                'Loader is not registered: "{0}"'.format(
                    loaderName
                )
            )

        return Loader.__registered[loaderName](
            *args,
            **kwargs
        )

    @staticmethod
    def createFromPath(filePath):
        """
        Create the loader registered for the extension of the file.
        """
        ext = os.path.splitext(filePath)[-1][1:].lower()
        if ext not in Loader.registeredNames():
            raise LoaderInvalidConfigError(
                "Cannot find a loader for: {}".format(filePath)
            )

        return Loader.create(ext)
