from .matrices import *
