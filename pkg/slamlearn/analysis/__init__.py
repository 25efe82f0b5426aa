from .metrics import *
from .hierarchy import *
from .bench import *
