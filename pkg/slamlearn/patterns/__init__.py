from .bits import *
from .patternset import *
from .qmatrix import *
from .gamma import *
