import os
import sys
from ..BacBoundError import BacBoundError

class ReporterError(BacBoundError):
    """Reporter error."""

class ReporterNotRegisteredError(ReporterError):
    """Reporter not registered error."""

class Reporter(object):
    """
    Reporter is used to handle the display of command output.

    A report is a title plus rows, every row is a dictionary sharing the keys
    of the first row (the columns).
    """

    __registered = {}
    defaultReporterEnv = 'BACBOUND_DEFAULT_REPORTER'
    precision = 6

    def __init__(self, title):
        """
        Create a reporter object.
        """
        self.__title = title
        self.__rows = []
        self.__columns = []

    def title(self):
        """
        Return the title of the report.
        """
        return self.__title

    def addRow(self, row):
        """
        Add a row (dictionary) to the reporter.
        """
        assert isinstance(row, dict), "Invalid row type!"

        for key in row.keys():
            if key not in self.__columns:
                self.__columns.append(key)

        self.__rows.append(dict(row))

    def rows(self):
        """
        Return the list of rows.
        """
        return list(self.__rows)

    def columns(self):
        """
        Return the column names (in insertion order).
        """
        return list(self.__columns)

    def display(self, stream=sys.stdout):
        """
        For reimplementation: write the report to the stream.
        """
        raise NotImplementedError

    @classmethod
    def formatValue(cls, value):
        """
        Return the text representation of a value (floats use a fixed precision).
        """
        if isinstance(value, bool):
            return 'true' if value else 'false'

        if isinstance(value, float):
            # tolerances and errors below the fixed precision
            if value != 0.0 and abs(value) < 10 ** -cls.precision:
                return '{:.2e}'.format(value)
            return '{:.{}f}'.format(value, cls.precision)

        if value is None:
            return '-'

        return str(value)

    @classmethod
    def register(cls, name, reporter):
        """
        Register a reporter.
        """
        assert issubclass(reporter, Reporter), \
            "Invalid reporter class!"

        cls.__registered[name] = reporter

    @classmethod
    def registeredNames(cls):
        """
        Return a list of registered reporters.
        """
        return list(cls.__registered.keys())

    @classmethod
    def defaultName(cls):
        """
        Return the name of the default reporter (from the environment, columns otherwise).
        """
        return os.environ.get(cls.defaultReporterEnv, 'columns')

    @classmethod
    def create(cls, name, *args, **kwargs):
        """
        Create a reporter object.
        """
        if name not in cls.__registered:
            raise ReporterNotRegisteredError(
                'Reporter is not registered: "{0}"'.format(
                    name
                )
            )

        return cls.__registered[name](*args, **kwargs)
