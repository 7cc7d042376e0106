from .elements import HeckeElement, LEFT, RIGHT
from .partitions import OrderedSetPartition
