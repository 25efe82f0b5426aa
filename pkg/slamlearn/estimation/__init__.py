from .config import *
from .results import *
from .estep import *
from .msteps import *
from .criteria import *
from .fitting import *
from .path import *
from .equivalence import *
