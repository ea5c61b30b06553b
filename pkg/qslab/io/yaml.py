import ruamel.yaml as yaml
import schema

from io import StringIO
from typing import Any, Dict, Mapping

from ..census import VerificationReport
from ..exceptions import BoundsError, QslabError
from ..preimages import PreimageSet

from .datadict import (Exportable, export_to_dict, import_preimages_from_dict,
                       import_report_from_dict)

__all__ = ['SCHEMA', 'import_preimages_from_yaml', 'import_report_from_yaml',
           'import_bounds_from_yaml', 'export_to_yaml', 'dump_yaml']


def _positive(value):
    return isinstance(value, int) and not isinstance(value, bool) and value >= 1


def _natural(value):
    return isinstance(value, int) and not isinstance(value, bool) and value >= 0


class SCHEMA:
    word = [schema.And(int, _positive)]

    count = schema.And(str, str.isdigit)

    preimages = {
        'target': word,
        'count': count,
        'members': [word],
    }

    failure = {
        'input': schema.Use(str),
        'expected': schema.Use(str),
        'actual': schema.Use(str),
    }

    report = {
        'suite': schema.Use(str),
        schema.Optional('passed'): bool,
        schema.Optional('exploratory'): bool,
        'parameters': {str: schema.And(int, _natural)},
        'cases': schema.And(int, _natural),
        schema.Optional('failures'): [failure],
        schema.Optional('notes'): {str: object},
    }

    bounds = {
        schema.Optional('suite'): schema.Use(str),
        'bounds': {str: schema.And(int, _natural)},
        schema.Optional('seed'): schema.And(int, _natural),
    }


def _load(text: str = None, filepath: str = None) -> Any:
    if not text and not filepath:
        raise TypeError(
            'A YAML must be provided, either using first argument or filepath argument.')
    elif text and filepath:
        raise TypeError('Either provide first argument or filepath argument, not both.')
    elif filepath:
        with open(filepath, 'r') as f:
            text = f.read()

    yml = yaml.YAML(typ='safe', pure=True)
    return yml.load(text)


def import_preimages_from_yaml(text: str = None, filepath: str = None) -> PreimageSet:
    """
    Import a preimage set from a YAML representation (first argument) or a YAML file
    (filepath argument). The structure is validated against *SCHEMA.preimages*.

    :param text: A YAML text. If not provided, filepath argument has to be provided.
    :param filepath: A path to a YAML file.
    :return: a *PreimageSet* instance
    :raise QslabError: if the document is not a valid preimage set
    """
    data = _load(text, filepath)
    try:
        data = schema.Schema(SCHEMA.preimages).validate(data)
    except schema.SchemaError as e:
        raise QslabError('YAML validation failed') from e
    return import_preimages_from_dict(data)


def import_report_from_yaml(text: str = None, filepath: str = None) -> VerificationReport:
    """
    Import a verification report from a YAML representation (first argument) or a YAML file
    (filepath argument). The structure is validated against *SCHEMA.report*.

    :param text: A YAML text. If not provided, filepath argument has to be provided.
    :param filepath: A path to a YAML file.
    :return: a *VerificationReport* instance
    :raise QslabError: if the document is not a valid report
    """
    data = _load(text, filepath)
    try:
        data = schema.Schema(SCHEMA.report).validate(data)
    except schema.SchemaError as e:
        raise QslabError('YAML validation failed') from e
    return import_report_from_dict(data)


def import_bounds_from_yaml(text: str = None, filepath: str = None) -> Dict[str, Any]:
    """
    Import verification bounds, of the form {suite: name, bounds: {key: int}, seed: int}
    where suite and seed are optional.

    :param text: A YAML text. If not provided, filepath argument has to be provided.
    :param filepath: A path to a YAML file.
    :return: the validated mapping
    :raise BoundsError: if the document is not valid
    """
    data = _load(text, filepath)
    try:
        return schema.Schema(SCHEMA.bounds).validate(data)
    except schema.SchemaError as e:
        raise BoundsError('Invalid bounds: {}'.format(e)) from e


def export_to_yaml(obj: Exportable, filepath: str = None) -> str:
    """
    Export given preimage set, census table or verification report to YAML. Its YAML
    representation is returned by this function. Automatically save the output to filepath,
    if provided.

    :param obj: object to export
    :param filepath: save output to given filepath, if provided
    :return: A textual YAML representation
    """
    return dump_yaml(export_to_dict(obj), filepath)


def dump_yaml(data: Mapping[str, Any], filepath: str = None) -> str:
    output = StringIO()

    yml = yaml.YAML(typ='safe', pure=True)
    yml.dump(dict(data), output)

    if filepath:
        with open(filepath, 'w') as f:
            f.write(output.getvalue())

    return output.getvalue()
