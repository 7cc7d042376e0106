from .results import *
