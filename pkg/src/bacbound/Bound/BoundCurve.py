import csv
import io
import numpy as np
from .Bound import Bound
from .RatePoint import BoundError
from ..Optimizer import OptimizerConfig

class BoundCurveError(BoundError):
    """Bound curve error."""

class BoundCurve(object):
    """
    Rows of (r1, simple, ul, main) evaluated on a uniform R1 grid.
    """

    columns = ('r1', 'simple', 'ul', 'main')
    precision = 6

    def __init__(self, rows):
        """
        Create a bound curve from a list of 4-tuples. Values are stored at the
        csv precision so that a written curve parses back to the same rows.
        """
        rows = [tuple(round(float(value), self.precision) for value in row) for row in rows]
        for row in rows:
            if len(row) != len(self.columns):
                raise BoundCurveError(
                    'Invalid curve row "{}"'.format(row)
                )

            if min(row[1:]) < 0.0:
                raise BoundCurveError(
                    'Negative bound in curve row "{}"'.format(row)
                )

        for previous, current in zip(rows, rows[1:]):
            if current[0] <= previous[0]:
                raise BoundCurveError(
                    'Curve r1 values must be strictly increasing: "{}" after "{}"'.format(
                        current[0],
                        previous[0]
                    )
                )

        self.__rows = rows

    def rows(self):
        """
        Return the list of rows.
        """
        return list(self.__rows)

    def column(self, name):
        """
        Return the values of a column.
        """
        if name not in self.columns:
            raise BoundCurveError(
                'Invalid curve column "{}"'.format(name)
            )

        index = self.columns.index(name)
        return [row[index] for row in self.__rows]

    def toCsv(self):
        """
        Return the curve serialized as csv.
        """
        stream = io.StringIO()
        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(self.columns)
        for row in self.__rows:
            writer.writerow(['{:.{}f}'.format(value, self.precision) for value in row])

        return stream.getvalue()

    def toDict(self):
        """
        Return the curve as a list of dictionaries (one per row).
        """
        return [dict(zip(self.columns, row)) for row in self.__rows]

    @classmethod
    def fromCsv(cls, contents):
        """
        Create a curve from csv contents.
        """
        reader = csv.reader(io.StringIO(contents))
        header = next(reader, None)
        if header is None or tuple(header) != cls.columns:
            raise BoundCurveError(
                'Invalid curve header "{}"'.format(header)
            )

        try:
            rows = [tuple(float(value) for value in row) for row in reader if row]
        except ValueError as err:
            raise BoundCurveError(
                'Invalid curve value: {}'.format(err)
            )

        return cls(rows)

    @classmethod
    def compute(cls, r1Lo, r1Hi, steps, config=None):
        """
        Evaluate the simple, ul and main bounds on a uniform grid of R1.
        """
        r1Lo = float(r1Lo)
        r1Hi = float(r1Hi)
        steps = int(steps)
        if not (0.0 <= r1Lo < r1Hi <= 1.0):
            raise BoundCurveError(
                'Invalid curve interval [{}, {}]'.format(r1Lo, r1Hi)
            )

        if steps < 2:
            raise BoundCurveError(
                'Curve steps must be at least 2, got "{}"'.format(steps)
            )

        if config is None:
            config = OptimizerConfig()

        bounds = [Bound.create(name, config) for name in cls.columns[1:]]
        rows = []
        for r1 in np.linspace(r1Lo, r1Hi, steps):
            r1 = float(r1)
            rows.append(tuple([r1] + [bound.value(r1) for bound in bounds]))

        return cls(rows)

def curve(r1Lo, r1Hi, steps, config=None):
    """
    Return a BoundCurve for the input interval.
    """
    return BoundCurve.compute(r1Lo, r1Hi, steps, config)
