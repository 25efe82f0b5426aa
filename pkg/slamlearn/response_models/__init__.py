from .params import *
from .theta import *
from .likelihood import *
from .tmatrix import *
