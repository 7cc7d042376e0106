"""Dyck paths as strings over U and D."""

# Utilities
import attr
import itertools

# Exceptions
from api.utils.exceptions import DegreeMismatch, InvalidInput


def _check_steps(instance, attribute, steps):
    height = 0
    for step in steps:
        if step not in 'UD':
            raise InvalidInput('unknown step {!r}'.format(step))
        height += 1 if step == 'U' else -1
        if height < 0:
            raise InvalidInput('{} goes below the axis'.format(steps))
    if height != 0:
        raise InvalidInput('{} does not return to the axis'.format(steps))


@attr.s(frozen=True, slots=True, order=True)
class DyckPath:

    steps = attr.ib(converter=lambda steps: str(steps).strip().upper(), validator=_check_steps)

    @property
    def n(self):
        """Semilength."""
        return len(self.steps) // 2

    @classmethod
    def staircase(cls, n):
        """(UD)^n."""
        return cls('UD' * n)

    @classmethod
    def pyramid(cls, n):
        """U^n D^n."""
        return cls('U' * n + 'D' * n)

    def runs(self):
        """Lengths (u_1, d_1, ..., u_k, d_k) of the maximal U- and D-runs."""
        return [len(list(group)) for _, group in itertools.groupby(self.steps)]

    def valleys(self):
        """Positions p with a D at p - 1 and a U at p (0-based)."""
        return [p for p in range(1, len(self.steps)) if self.steps[p - 1:p + 1] == 'DU']

    def peaks(self):
        return [p for p in range(len(self.steps) - 1) if self.steps[p:p + 2] == 'UD']

    def is_irreducible(self):
        """Touches the axis only at its ends."""
        height = 0
        for step in self.steps[:-1]:
            height += 1 if step == 'U' else -1
            if height == 0:
                return False
        return bool(self.steps)

    def components(self):
        """Irreducible factors."""
        factors = []
        height, start = 0, 0
        for p, step in enumerate(self.steps):
            height += 1 if step == 'U' else -1
            if height == 0:
                factors.append(DyckPath(self.steps[start:p + 1]))
                start = p + 1
        return factors

    def __add__(self, other):
        return DyckPath(self.steps + other.steps)

    def __str__(self):
        return self.steps


def _same_semilength(instance, attribute, second):
    if instance.first.n != second.n:
        raise DegreeMismatch(instance.first.n, second.n)


@attr.s(frozen=True, slots=True, order=True)
class PathPair:
    first = attr.ib(validator=attr.validators.instance_of(DyckPath))
    second = attr.ib(validator=[attr.validators.instance_of(DyckPath), _same_semilength])

    @property
    def n(self):
        return self.first.n

    def __str__(self):
        return '({}, {})'.format(self.first, self.second)
