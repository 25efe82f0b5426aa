from .version import *
from .imports import *
from .patterns import *
from .response_models import *
from .identifiability import *
from .estimation import *
from .screening import *
from .simulation import *
from .analysis import *
from .datasets import *
