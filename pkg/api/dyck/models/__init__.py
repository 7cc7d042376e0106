from .paths import DyckPath, PathPair
