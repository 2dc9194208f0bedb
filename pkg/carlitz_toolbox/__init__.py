from .analysis import *
from .carlitz_seq import *
from .errors import *
from .exact_arith import *
from .poly_algebra import *
from .series_oracle import *
from .triangles import *
