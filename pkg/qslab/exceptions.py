class QslabError(Exception):
    pass


class WordError(QslabError, ValueError):
    """
    Raised when a word cannot be parsed, or when its values violate the constraints of the
    requested type (distinct positive integers, or exactly 1..n for a permutation).
    """
    pass


class ShapeError(QslabError, ValueError):
    """
    Raised when an operation is not defined for the shape of the given word.
    """
    pass


class IndexRangeError(QslabError, IndexError):
    """
    Raised when a triangle entry is requested outside of its domain.
    """
    pass


class CutoffError(QslabError):
    """
    Raised when an exhaustive scan is requested above the configured cutoff.

    :param size: requested length, or None if the cutoff itself is invalid
    :param cutoff: largest accepted length
    """

    def __init__(self, size, cutoff):
        super().__init__()
        self._size = size
        self._cutoff = cutoff

    @property
    def size(self):
        return self._size

    @property
    def cutoff(self):
        return self._cutoff

    def __str__(self):
        if self._size is None:
            return 'Invalid cutoff {!r}, expected a non-negative integer'.format(self._cutoff)
        return 'Exhaustive scan over S_{} exceeds the cutoff ({})'.format(self._size, self._cutoff)


class FormulaError(QslabError):
    """
    Raised when an internal consistency check on a closed formula fails.
    """
    pass


class UnknownSuiteError(QslabError, KeyError):
    """
    Raised when a verification suite does not exist.
    """

    def __str__(self):
        return 'Unknown suite {}'.format(self.args[0] if self.args else '')


class BoundsError(QslabError):
    """
    Raised when verification bounds are invalid.
    """
    pass


class VerificationError(QslabError):
    """
    Raised when a verification report holds failures.

    :param report: the failing *VerificationReport*
    """

    def __init__(self, report):
        super().__init__()
        self._report = report

    @property
    def report(self):
        return self._report

    def __str__(self):  # pragma: no cover
        message = ['{}'.format(self.__class__.__name__)]
        message.append('Suite: {}'.format(self._report.suite))
        message.append('Parameters: {}'.format(self._report.parameters))
        message.append('Failures:')
        for failure in self._report.failures:
            message.append(' - {}'.format(failure))
        return '\n'.join(message)
