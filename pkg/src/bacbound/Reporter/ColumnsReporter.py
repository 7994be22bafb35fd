import sys
from .Reporter import Reporter

class ColumnsReporter(Reporter):
    """
    Implements a columns reporter (tab aligned table).
    """

    __columnSize = 8

    def display(self, stream=sys.stdout):
        """
        Implement the column display.
        """
        columns = self.columns()
        table = [columns] + [
            [self.formatValue(row.get(column)) for column in columns]
            for row in self.rows()
        ]

        # computing the width of every column
        widths = [
            max(self.__textColumnSize(line[index]) for line in table)
            for index in range(len(columns))
        ]

        if self.title():
            stream.write('# {}\n'.format(self.title()))

        for line in table:
            cells = []
            for index, text in enumerate(line):
                if index == len(line) - 1:
                    cells.append(text)
                    continue

                cells.append(
                    '{}{}'.format(
                        text,
                        "\t" * max(int((widths[index] - len(text)) / self.__columnSize), 1)
                    )
                )
            stream.write('{}\n'.format(''.join(cells)))

    @classmethod
    def __textColumnSize(cls, text):
        """
        Return the size of the text fitted in columns.
        """
        return len(text) + cls.__columnSize - (len(text) % cls.__columnSize)


# registering reporter
Reporter.register(
    'columns',
    ColumnsReporter
)
