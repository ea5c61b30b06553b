import json
import schema

from typing import Any, Mapping

from ..exceptions import QslabError
from ..preimages import PreimageSet

from .datadict import Exportable, export_to_dict, import_preimages_from_dict
from .yaml import SCHEMA

__all__ = ['export_to_json', 'import_preimages_from_json', 'dump_json']


def dump_json(data: Mapping[str, Any]) -> str:
    """
    Serialize given mapping as a single JSON document. Keys keep their insertion order, so
    the output of a given object is always the same.
    """
    return json.dumps(data, indent=2)


def export_to_json(obj: Exportable, filepath: str = None) -> str:
    """
    Export given preimage set, census table or verification report to JSON, and
    automatically save the output to filepath, if provided.

    :param obj: object to export
    :param filepath: save output to given filepath, if provided
    :return: A textual JSON representation
    """
    text = dump_json(export_to_dict(obj))
    if filepath:
        with open(filepath, 'w') as f:
            f.write(text)
    return text


def import_preimages_from_json(text: str) -> PreimageSet:
    """
    Import a preimage set from its JSON representation, as produced by *export_to_json*.
    Exporting the result gives back the same text.

    :param text: a JSON document
    :return: a *PreimageSet* instance
    :raise QslabError: if the document is not a valid preimage set
    """
    try:
        data = schema.Schema(SCHEMA.preimages).validate(json.loads(text))
    except (ValueError, schema.SchemaError) as e:
        raise QslabError('JSON validation failed') from e
    return import_preimages_from_dict(data)
