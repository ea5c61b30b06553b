from .trace import *
from .queuesort import *
