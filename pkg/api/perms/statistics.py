"""Left-to-right maxima, right-to-left minima and the Catalan monoids."""

# Models
from api.perms.models import Direction, MonotoneMap, Permutation


def alpha(w):
    """alpha(w)(i) = max{w(j) : j <= i}."""
    values = []
    current = 0
    for v in w.values:
        current = max(current, v)
        values.append(current)
    return MonotoneMap(Direction.INCREASING, values)


def beta(w):
    """beta(w)(i) = min{w(j) : j >= i}."""
    values = []
    current = w.n + 1
    for v in reversed(w.values):
        current = min(current, v)
        values.append(current)
    return MonotoneMap(Direction.DECREASING, reversed(values))


def monotone_maps(n, direction=Direction.INCREASING):
    """Every element of C_n^+ (or C_n^-), in lexicographic order."""
    def extend(prefix):
        i = len(prefix) + 1
        if i > n:
            yield MonotoneMap(direction, prefix)
            return
        low = prefix[-1] if prefix else 1
        if direction is Direction.INCREASING:
            candidates = range(max(low, i), n + 1)
        else:
            candidates = range(low, i + 1)
        for v in candidates:
            yield from extend(prefix + (v,))

    return list(extend(()))


def catalan_generators(n, direction=Direction.INCREASING):
    """Images of e_1, ..., e_{n-1}: i -> i+1 in C_n^+ and i+1 -> i in C_n^-."""
    if direction is Direction.INCREASING:
        image = alpha
    else:
        image = beta
    return [image(Permutation.simple(i, n)) for i in range(1, n)]
