from .matrices import BoolMatrix, ConvexRelation
from .monoids import MonoidTable
