from .Loader import Loader, LoaderError, LoaderInvalidConfigError, LoaderNotRegisteredError
from .JsonLoader import JsonLoader
from .YamlLoader import YamlLoader
