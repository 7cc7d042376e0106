from .permutations import *
