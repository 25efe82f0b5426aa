from .slamdata import *
from .simulated import *
