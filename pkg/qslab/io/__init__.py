from .datadict import (export_to_dict, export_apply_to_dict, import_preimages_from_dict,
                       import_census_from_dict, import_report_from_dict)
from .yaml import (SCHEMA, import_preimages_from_yaml, import_report_from_yaml,
                   import_bounds_from_yaml, export_to_yaml, dump_yaml)
from .json import export_to_json, import_preimages_from_json, dump_json

__all__ = [
    'export_to_dict', 'export_apply_to_dict', 'import_preimages_from_dict',
    'import_census_from_dict', 'import_report_from_dict',
    'SCHEMA', 'import_preimages_from_yaml', 'import_report_from_yaml',
    'import_bounds_from_yaml', 'export_to_yaml', 'dump_yaml',
    'export_to_json', 'import_preimages_from_json', 'dump_json',
]
