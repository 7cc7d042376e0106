"""The bijection Delta between C_n^+ and Dyck paths of semilength n."""

# Models
from api.dyck.models import DyckPath
from api.perms.models import Direction, MonotoneMap

# Perms
from api.perms.statistics import monotone_maps


def delta(a):
    """U^{a(1)} D U^{a(2) - a(1)} D ... U^{a(n) - a(n-1)} D."""
    steps = []
    previous = 0
    for value in a.values:
        steps.append('U' * (value - previous) + 'D')
        previous = value
    return DyckPath(''.join(steps))


def delta_inverse(path):
    """a(j) is the number of U steps before the j-th D."""
    values = []
    ups = 0
    for step in path.steps:
        if step == 'U':
            ups += 1
        else:
            values.append(ups)
    return MonotoneMap(Direction.INCREASING, values)


def dyck_paths(n):
    return [delta(a) for a in monotone_maps(n)]
