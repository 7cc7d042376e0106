"""Idempotents of H_n: the z_w with w the longest element of a parabolic subgroup."""

# Models
from api.hecke.models import HeckeElement
from api.perms.models import Permutation

# Perms
from api.perms.words import LEFT, descents


def parabolic_longest(J, n):
    """Longest element of the subgroup generated by {s_j : j in J}.

    It reverses every maximal run of positions joined by letters of J.
    """
    values = []
    start = 1
    for i in range(1, n + 1):
        if i not in J:
            values.extend(range(i, start - 1, -1))
            start = i + 1
    return Permutation(values)


def idempotents(n):
    result = []
    for w in Permutation.all(n):
        z = HeckeElement(w)
        if z * z == z:
            result.append(z)
    return result


def is_parabolic_longest(w):
    """Whether w is the longest element of the parabolic generated by D_L(w)."""
    return w == parabolic_longest(descents(w, LEFT), w.n)
