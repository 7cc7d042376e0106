"""Bruhat ideals: z_w is realized as the principal ideal below w."""

# Models
from api.perms.models import Permutation, compose

# Perms
from api.perms.bruhat import bruhat_leq

# Exceptions
from api.utils.exceptions import DegreeMismatch, InvalidInput


def bruhat_ideal(w):
    return frozenset(u for u in Permutation.all(w.n) if bruhat_leq(u, w))


def ideal_product(first, second):
    """{ab : a in first, b in second}."""
    first, second = list(first), list(second)
    degrees = {w.n for w in first} | {w.n for w in second}
    if len(degrees) > 1:
        left, right = sorted(degrees)[:2]
        raise DegreeMismatch(left, right)
    return frozenset(compose(a, b) for a in first for b in second)


def ideal_top(ideal):
    """The unique maximal element of a principal Bruhat ideal."""
    top = max(ideal, key=lambda w: w.length)
    if len(bruhat_ideal(top)) != len(ideal):
        raise InvalidInput('not a principal Bruhat ideal')
    return top
