class CheckResult(object):
    """
    Outcome of a verification check.
    """

    def __init__(self, name, samples, maxViolation, tolerance=0.0):
        """
        Create a check result.

        The check passes when the largest violation does not exceed the tolerance.
        """
        self.__name = name
        self.__samples = int(samples)
        self.__maxViolation = float(maxViolation)
        self.__tolerance = float(tolerance)

    def name(self):
        """
        Return the name of the check.
        """
        return self.__name

    def samples(self):
        """
        Return the number of evaluated samples.
        """
        return self.__samples

    def maxViolation(self):
        """
        Return the largest violation found (zero or negative when satisfied).
        """
        return self.__maxViolation

    def tolerance(self):
        """
        Return the violation tolerance.
        """
        return self.__tolerance

    def passed(self):
        """
        Return a boolean telling if the check passed.
        """
        return self.__maxViolation <= self.__tolerance

    def toDict(self):
        """
        Return the result as a dictionary.
        """
        return {
            'check': self.__name,
            'samples': self.__samples,
            'maxViolation': self.__maxViolation,
            'passed': self.passed()
        }

    def __repr__(self):
        """
        Return a string representation of the result.
        """
        return 'CheckResult({}, samples={}, maxViolation={}, passed={})'.format(
            self.__name,
            self.__samples,
            self.__maxViolation,
            self.passed()
        )
