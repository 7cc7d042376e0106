from .paths import *
