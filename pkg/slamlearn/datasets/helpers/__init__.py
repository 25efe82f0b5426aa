from .history import *
from .save import *
