"""Order preserving maps of {1..n} (the Catalan monoids C_n^+ and C_n^-)."""

# Utilities
import attr
import enum

# Exceptions
from api.utils.exceptions import DegreeMismatch, InvalidInput

# Models
from .permutations import format_values, parse_values


class Direction(enum.Enum):
    INCREASING = 'non-decreasing'
    DECREASING = 'non-increasing'


def _check_monotone(instance, attribute, values):
    n = len(values)
    if n == 0 or any(not 1 <= v <= n for v in values):
        raise InvalidInput('{} is not a map of 1..{}'.format(values, n))
    if any(values[i] > values[i + 1] for i in range(n - 1)):
        raise InvalidInput('{} is not order preserving'.format(values))
    if instance.direction is Direction.INCREASING:
        extensive = all(v >= i for i, v in enumerate(values, 1))
    else:
        extensive = all(v <= i for i, v in enumerate(values, 1))
    if not extensive:
        raise InvalidInput('{} is not {}'.format(values, instance.direction.value))


@attr.s(frozen=True, slots=True, order=True, repr=False)
class MonotoneMap:
    """Order preserving map, either non-decreasing (v(i) >= i) or non-increasing (v(i) <= i)."""

    direction = attr.ib(validator=attr.validators.instance_of(Direction), order=lambda d: d.value)
    values = attr.ib(converter=tuple, validator=_check_monotone)

    @property
    def n(self):
        return len(self.values)

    @classmethod
    def identity(cls, n, direction=Direction.INCREASING):
        return cls(direction, range(1, n + 1))

    @classmethod
    def parse(cls, text, direction=Direction.INCREASING):
        return cls(direction, parse_values(text))

    def __call__(self, j):
        return self.values[j - 1]

    def __mul__(self, other):
        """self * other applies other first."""
        if self.n != other.n:
            raise DegreeMismatch(self.n, other.n)
        if self.direction is not other.direction:
            raise InvalidInput('cannot compose maps of different directions')
        return MonotoneMap(self.direction, (self.values[v - 1] for v in other.values))

    def __str__(self):
        return format_values(self.values)

    def __repr__(self):
        return 'MonotoneMap({}, {})'.format(self.direction.value, self)

    def image(self):
        return frozenset(self.values)

    def kernel_blocks(self):
        """Maximal runs of points with equal image, as (first, last) pairs."""
        blocks = []
        start = 1
        for i in range(2, self.n + 2):
            if i > self.n or self(i) != self(start):
                blocks.append((start, i - 1))
                start = i
        return blocks

    def leq(self, other):
        """Pointwise order."""
        if self.n != other.n:
            raise DegreeMismatch(self.n, other.n)
        return all(a <= b for a, b in zip(self.values, other.values))
