from .ballot import *
from .polynomial import *
from .formulas import *
