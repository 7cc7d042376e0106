from .matrices import RationalMatrix, scalar, format_scalar
from .modules import HeckeModule, SocleComponent, SocleReport
