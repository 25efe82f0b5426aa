from .manifest import *
from .options import *
from .commands import *
from .main import *
