"""The order on C_n^+ dual to the H-order, and its Dyck path description."""

# Utilities
import functools

# Models
from api.dyck.models import DyckPath

# Dyck
from api.dyck.bijection import delta

# Perms
from api.perms.statistics import monotone_maps

# Exceptions
from api.utils.exceptions import DegreeMismatch


@functools.lru_cache(maxsize=None)
def _catalan_monoid(n):
    return tuple(monotone_maps(n))


@functools.lru_cache(maxsize=None)
def _multiples(a):
    """(C_n^+ a, a C_n^+)."""
    elements = _catalan_monoid(a.n)
    return frozenset(g * a for g in elements), frozenset(a * h for h in elements)


def h_order_prec(a, b):
    """a < b iff b = g a and b = a h for some g, h in C_n^+."""
    if a.n != b.n:
        raise DegreeMismatch(a.n, b.n)
    left, right = _multiples(a)
    return b in left and b in right


@functools.lru_cache(maxsize=None)
def cover_rectangular(path):
    """Paths obtained by completing a run of consecutive valleys to peaks.

    With runs U^u1 D^d1 U^u2 ... D^dk, the valley t sits between D^dt and
    U^u(t+1); completing it replaces that factor by U^u(t+1) D^dt. The
    empty choice keeps the path itself.
    """
    runs = path.runs()
    pairs = [(runs[k], runs[k + 1]) for k in range(0, len(runs), 2)]
    valleys = len(pairs) - 1
    covers = {path}
    for first in range(valleys):
        for last in range(first, valleys):
            pieces = []
            for t, (ups, downs) in enumerate(pairs):
                # the U-run of pair t moved left when valley t - 1 was completed
                if not first <= t - 1 <= last:
                    pieces.append('U' * ups)
                if first <= t <= last:
                    pieces.append('U' * pairs[t + 1][0])
                pieces.append('D' * downs)
            covers.add(DyckPath(''.join(pieces)))
    return frozenset(covers)


@functools.lru_cache(maxsize=None)
def _reachable(start):
    seen = {start}
    frontier = [start]
    while frontier:
        following = []
        for path in frontier:
            for cover in cover_rectangular(path):
                if cover not in seen:
                    seen.add(cover)
                    following.append(cover)
        frontier = following
    return frozenset(seen)


def prec_prime(a, b):
    """Reflexive transitive closure of the covers, pulled back through Delta."""
    if a.n != b.n:
        raise DegreeMismatch(a.n, b.n)
    return delta(b) in _reachable(delta(a))
