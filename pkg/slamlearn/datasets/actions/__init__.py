from .analyze import *
from .subset import *
