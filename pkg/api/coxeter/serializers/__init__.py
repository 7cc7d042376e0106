from .systems import *
