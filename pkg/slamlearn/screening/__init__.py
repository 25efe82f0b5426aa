from .config import *
from .results import *
from .gibbs import *
from .variational import *
