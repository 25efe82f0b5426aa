from .conditions import *
from .generic import *
from .equivalence import *
from .report import *
