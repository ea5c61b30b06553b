from .table import *
from .witnesses import *
from .report import *
from .suites import *
