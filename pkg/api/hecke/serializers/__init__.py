from .hecke import *
