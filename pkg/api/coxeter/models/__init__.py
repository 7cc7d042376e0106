from .systems import CoxeterSystem
from .parabolics import ParabolicData
