from .streams import *
from .blocks import *
from .design import *
from .generate import *
