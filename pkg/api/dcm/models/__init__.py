from .elements import DCElement
from .fibers import CatalanFiberReport, FiberReport
from .presentations import PresentationInstance, PresentationReport
