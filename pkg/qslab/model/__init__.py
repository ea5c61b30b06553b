from .words import *
from .decomposition import *
from .patterns import *
