from typing import Any, Dict, Mapping, Union

from ..census import CensusTable, Failure, VerificationReport
from ..exceptions import QslabError, WordError
from ..model import InjectiveWord
from ..preimages import PreimageSet
from ..sorting import OpTrace

__all__ = ['export_to_dict', 'export_apply_to_dict', 'import_preimages_from_dict',
           'import_census_from_dict', 'import_report_from_dict']


Exportable = Union[PreimageSet, CensusTable, VerificationReport]


def _word(values) -> InjectiveWord:
    try:
        return InjectiveWord(values)
    except WordError as e:
        raise QslabError('Unable to load word {!r}'.format(values)) from e


def export_apply_to_dict(word: InjectiveWord, output: InjectiveWord,
                         trace: OpTrace = None) -> Dict[str, Any]:
    """
    Export the result of Queuesort on given word. Trace is included if provided.
    """
    data = {'input': list(word), 'output': list(output)}  # type: Dict[str, Any]
    if trace is not None:
        data['trace'] = str(trace)
    return data


def _export_preimages(preimages: PreimageSet) -> Dict[str, Any]:
    return {
        'target': list(preimages.target),
        'count': str(len(preimages)),
        'members': [list(member) for member in preimages],
    }


def _export_census(table: CensusTable) -> Dict[str, Any]:
    return {
        'n': table.n,
        'tally': {str(k): str(v) for k, v in table.items()},
    }


def _export_report(report: VerificationReport) -> Dict[str, Any]:
    return {
        'suite': report.suite,
        'passed': report.passed,
        'exploratory': report.exploratory,
        'parameters': report.parameters,
        'cases': report.cases,
        'failures': [
            {'input': f.input, 'expected': f.expected, 'actual': f.actual}
            for f in report.failures
        ],
        'notes': report.notes,
    }


def export_to_dict(obj: Exportable) -> Dict[str, Any]:
    """
    Export given preimage set, census table or verification report to a mapping of
    built-in types. Large integers are exported as decimal strings.

    :param obj: object to export
    :return: a dict
    :raise TypeError: if the object cannot be exported
    """
    if isinstance(obj, PreimageSet):
        return _export_preimages(obj)
    elif isinstance(obj, CensusTable):
        return _export_census(obj)
    elif isinstance(obj, VerificationReport):
        return _export_report(obj)
    else:
        raise TypeError('Cannot export {!r}'.format(obj))


def import_preimages_from_dict(data: Mapping[str, Any]) -> PreimageSet:
    """
    :raise QslabError: if the count does not match the members
    """
    target = _word(data['target'])
    members = [_word(values) for values in data['members']]
    preimages = PreimageSet(target, members)
    if str(len(preimages)) != str(data['count']):
        raise QslabError('Count {} does not match the {} members'.format(
            data['count'], len(preimages)))
    return preimages


def import_census_from_dict(data: Mapping[str, Any]) -> CensusTable:
    return CensusTable(int(data['n']), {int(k): int(v) for k, v in data['tally'].items()})


def import_report_from_dict(data: Mapping[str, Any]) -> VerificationReport:
    failures = [Failure(f['input'], f['expected'], f['actual']) for f in data.get('failures', [])]
    report = VerificationReport(
        data['suite'], data['parameters'], data['cases'], failures,
        exploratory=data.get('exploratory', False), notes=data.get('notes'),
    )
    if 'passed' in data and data['passed'] != report.passed:
        raise QslabError('Report {} is marked as {} but has {} failures'.format(
            report.suite, 'passed' if data['passed'] else 'failed', len(failures)))
    return report
