import os
import sys
import json
import pathlib
from .BacBoundError import BacBoundError

class ConfigError(BacBoundError):
    """Config Error."""

class ConfigKeyError(ConfigError):
    """Config Key Error."""

class ConfigInvalidFileError(ConfigError):
    """Config Invalid File Error."""

class _ConfigSentinelValue:
    """Config sentinel value."""

class Config(object):
    """
    User level defaults persisted as a json object under "<name>.json".

    The cli keeps the optimizer defaults under Config('optimizer'), edited
    through "bacbound config". Files live under the directory defined by
    BACBOUND_CONFIG_DIRECTORY, otherwise under the platform application
    data directory.
    """
    __sentinelValue = _ConfigSentinelValue()
    __configDirectoryEnvName = 'BACBOUND_CONFIG_DIRECTORY'

    def __init__(self, name):
        """
        Load the config stored under the input name (empty when there is no file yet).
        """
        assert isinstance(name, str), 'config name needs to be defined as string'

        self.__name = name
        self.__data = self.__load(self.filePath())

    def name(self):
        """
        Return the config name.
        """
        return self.__name

    def hasKey(self, key):
        """
        Return a boolean telling if the input key exists under the config.
        """
        return key in self.__data

    def keys(self):
        """
        Return the sorted list of stored keys.
        """
        return sorted(self.__data.keys())

    def value(self, key, defaultValue=__sentinelValue):
        """
        Return the value for the input key.

        Raises ConfigKeyError when the key does not exist and no default
        value is given.
        """
        if key in self.__data:
            return self.__data[key]

        if defaultValue is self.__sentinelValue:
            raise ConfigKeyError(
                'Invalid key "{}" in config "{}"'.format(key, self.name())
            )

        return defaultValue

    def toDict(self):
        """
        Return a copy of the stored values.
        """
        return dict(self.__data)

    def update(self, values=None, removeKeys=()):
        """
        Set the input values, drop the input keys and write the file.
        """
        values = dict(values or {})
        for key in list(values.keys()) + list(removeKeys):
            assert isinstance(key, str), 'key needs to be defined as string'

        for key in removeKeys:
            if key not in self.__data:
                raise ConfigKeyError(
                    'Invalid key "{}" in config "{}"'.format(key, self.name())
                )
            del self.__data[key]

        self.__data.update(values)
        self.__write()

    def setValue(self, key, value):
        """
        Set a single value and write the file.
        """
        self.update({key: value})

    def clear(self):
        """
        Remove every stored value.
        """
        self.__data = {}
        self.__write()

    def filePath(self):
        """
        Return the file path for the config.
        """
        if os.environ.get(self.__configDirectoryEnvName):
            configDirectory = pathlib.Path(os.environ[self.__configDirectoryEnvName])
        else:
            configDirectory = self.__defaultConfigBaseDirectory()

        return configDirectory / '{}.json'.format(self.name())

    def __write(self):
        filePath = self.filePath()
        try:
            os.makedirs(filePath.parent, exist_ok=True)
            with open(filePath, 'w') as f:
                json.dump(self.__data, f, indent=4, sort_keys=True)
        except OSError as err:
            raise ConfigError(
                'Unable to write config "{}": {}'.format(filePath, err)
            )

    @classmethod
    def __load(cls, filePath):
        if not os.path.exists(filePath):
            return {}

        try:
            with open(filePath) as f:
                data = json.load(f)
        except (OSError, ValueError) as err:
            raise ConfigInvalidFileError(
                'Failed to load config "{}": {}'.format(filePath, err)
            )

        if not isinstance(data, dict):
            raise ConfigInvalidFileError(
                'Config "{}" must hold a json object'.format(filePath)
            )

        return data

    @staticmethod
    def __defaultConfigBaseDirectory():
        """
        Return the default config base directory when BACBOUND_CONFIG_DIRECTORY is not defined.
        """
        home = pathlib.Path.home()

        if sys.platform == 'win32':
            return pathlib.Path(os.path.expandvars('%APPDATA%')) / 'bacbound'

        if sys.platform == 'darwin':
            return home / 'Library/Application Support/bacbound'

        return home / '.local/share/bacbound'
