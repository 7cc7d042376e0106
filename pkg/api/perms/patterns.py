"""Pattern containment."""

# Utilities
import itertools


def contains_pattern(w, p):
    """Whether some subsequence of w is order isomorphic to p."""
    k = p.n
    if k > w.n:
        return False
    # positions of p listed by increasing value
    order = sorted(range(k), key=lambda a: p.values[a])
    values = w.values
    for positions in itertools.combinations(range(w.n), k):
        picked = [values[positions[a]] for a in order]
        if all(picked[b] < picked[b + 1] for b in range(k - 1)):
            return True
    return False


def avoids(w, *patterns):
    return not any(contains_pattern(w, p) for p in patterns)
