"""Parabolic subgroups, cosets and maximal coset representatives."""

# Models
from api.coxeter.models import ParabolicData

# Coxeter
from api.coxeter.hecke import hecke_w_product

# Exceptions
from api.utils.exceptions import InvalidInput


def _check_subset(system, J):
    J = frozenset(J)
    if not J <= system.generator_set:
        raise InvalidInput('{} is not a set of generators of {}'.format(sorted(s + 1 for s in J), system.name))
    return J


def maximal_parabolic(system, s):
    """The set (s) = S minus {s}."""
    if not 0 <= s < system.rank:
        raise InvalidInput('generator {} does not exist in rank {}'.format(s + 1, system.rank))
    return system.generator_set - {s}


def subgroup(system, J):
    """Elements of W_J, by closure under right multiplication."""
    J = _check_subset(system, J)
    found = {0}
    frontier = [0]
    while frontier:
        following = []
        for k in frontier:
            for s in J:
                target = system.right[k][s]
                if target not in found:
                    found.add(target)
                    following.append(target)
        frontier = following
    return frozenset(found)


def coset_max_rep(system, J, w):
    """w^J, the longest element of w W_J, computed as z_w e_J."""
    J = _check_subset(system, J)
    return hecke_w_product(system, w, parabolic_longest(system, J))


def parabolic_longest(system, J):
    elements = subgroup(system, J)
    return max(elements, key=lambda k: system.lengths[k])


def cosets(system, J):
    """Left cosets w W_J as sets, ordered by their minimal element index."""
    J = _check_subset(system, J)
    w_J = parabolic_longest(system, J)
    blocks = {}
    for k in range(len(system)):
        blocks.setdefault(hecke_w_product(system, k, w_J), set()).add(k)
    return sorted((frozenset(block) for block in blocks.values()), key=min)


def parabolic(system, J):
    J = _check_subset(system, J)
    w_J = parabolic_longest(system, J)
    reps = [max(block, key=lambda k: system.lengths[k]) for block in cosets(system, J)]
    return ParabolicData(J=J, subgroup=subgroup(system, J), longest=w_J, max_reps=reps)


def is_max_rep(system, J, w):
    """w is in W^J iff D_R(w) contains J."""
    return frozenset(J) <= system.right_descents(w)


def coset_action(system, J, s):
    """The permutation of cosets induced by left multiplication by s."""
    blocks = cosets(system, J)
    position = {}
    for i, block in enumerate(blocks):
        for k in block:
            position[k] = i
    g = system.generator_index(s)
    return tuple(position[system.multiply(g, min(block))] for block in blocks)
