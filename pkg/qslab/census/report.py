from typing import Any, Dict, Iterable, List, Mapping

from ..exceptions import VerificationError

__all__ = ['Failure', 'VerificationReport']


class Failure:
    """
    A failing case of a verification suite. Values are stored in their textual form.

    :param input: the checked input (a word, a shape, an index, ...)
    :param expected: the expected value
    :param actual: the computed value
    """

    __slots__ = ['input', 'expected', 'actual']

    def __init__(self, input: Any, expected: Any, actual: Any) -> None:
        self.input = str(input)
        self.expected = str(expected)
        self.actual = str(actual)

    def _key(self):
        return self.input, self.expected, self.actual

    def __eq__(self, other):
        if isinstance(other, Failure):
            return self._key() == other._key()
        else:
            return NotImplemented

    def __lt__(self, other):
        if isinstance(other, Failure):
            return self._key() < other._key()
        else:
            return NotImplemented

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return '{}({!r}, {!r}, {!r})'.format(
            self.__class__.__name__, self.input, self.expected, self.actual)

    def __str__(self):
        return '{}: expected {}, got {}'.format(self.input, self.expected, self.actual)


class VerificationReport:
    """
    Outcome of a verification suite.

    A report passes if it holds no failure. Failures of an exploratory suite are findings
    rather than errors: *check* only raises for them in strict mode.

    :param suite: name of the suite
    :param parameters: bounds (and seed) the suite ran with
    :param cases: number of checked cases
    :param failures: failing cases, stored sorted by input
    :param exploratory: True if the suite checks a conjecture
    :param notes: additional information, such as the largest length that was checked
    """

    def __init__(self, suite: str, parameters: Mapping[str, int], cases: int,
                 failures: Iterable[Failure] = (), exploratory: bool = False,
                 notes: Mapping[str, Any] = None) -> None:
        self._suite = suite
        self._parameters = dict(sorted(parameters.items()))
        self._cases = cases
        self._failures = sorted(failures)
        self._exploratory = exploratory
        self._notes = dict(notes or {})

    @property
    def suite(self) -> str:
        return self._suite

    @property
    def parameters(self) -> Dict[str, int]:
        return dict(self._parameters)

    @property
    def cases(self) -> int:
        return self._cases

    @property
    def failures(self) -> List[Failure]:
        return list(self._failures)

    @property
    def exploratory(self) -> bool:
        return self._exploratory

    @property
    def notes(self) -> Dict[str, Any]:
        return dict(self._notes)

    @property
    def passed(self) -> bool:
        return len(self._failures) == 0

    def check(self, strict: bool = False) -> 'VerificationReport':
        """
        Raise if this report holds failures. Failures of exploratory suites are ignored
        unless *strict* is set.

        :param strict: also raise for exploratory suites
        :return: this report
        :raise VerificationError: if the report does not pass
        """
        if not self.passed and (strict or not self._exploratory):
            raise VerificationError(self)
        return self

    def __eq__(self, other):
        if isinstance(other, VerificationReport):
            return (self._suite, self._parameters, self._cases, self._failures,
                    self._exploratory, self._notes) == (
                other._suite, other._parameters, other._cases, other._failures,
                other._exploratory, other._notes)
        else:
            return NotImplemented

    def __repr__(self):
        return '{}({!r}, cases={}, failures={})'.format(
            self.__class__.__name__, self._suite, self._cases, len(self._failures))
