import sys
import json
from fractions import Fraction
from .Reporter import Reporter

class JsonReporter(Reporter):
    """
    Implements a json reporter.
    """

    def display(self, stream=sys.stdout):
        """
        Implement the json display.
        """
        result = {
            'title': self.title(),
            'rows': self.rows()
        }

        stream.write(
            '{}\n'.format(
                json.dumps(
                    result,
                    sort_keys=True,
                    indent=4,
                    separators=(',', ': '),
                    default=self.__encode
                )
            )
        )

    @classmethod
    def __encode(cls, value):
        """
        Encode values json does not support natively.
        """
        if isinstance(value, Fraction):
            return str(value)

        if hasattr(value, 'toDict'):
            return value.toDict()

        if hasattr(value, 'tolist'):
            return value.tolist()

        raise TypeError('Cannot encode "{}"'.format(type(value).__name__))


# registering reporter
Reporter.register(
    'json',
    JsonReporter
)
