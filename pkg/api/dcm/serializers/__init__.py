from .dcm import *
