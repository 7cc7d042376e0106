"""Coxeter complex counts, idempotents and the action on maximal parabolic ideals."""

# Utilities
import itertools

# Coxeter
from api.coxeter.hecke import hecke_w_product
from api.coxeter.parabolics import maximal_parabolic, parabolic, parabolic_longest


def vertex_count(system):
    """v(W), the sum of the indices of the maximal parabolic subgroups."""
    return sum(parabolic(system, maximal_parabolic(system, s)).index for s in range(system.rank))


def coxeter_idempotents(system):
    """e_J for every J in S, as (J, element index) pairs."""
    result = []
    for size in range(system.rank + 1):
        for J in itertools.combinations(range(system.rank), size):
            result.append((frozenset(J), parabolic_longest(system, J)))
    return result


def idempotent_leq(system, e, f):
    """e <= f iff ef = fe = e."""
    return hecke_w_product(system, e, f) == e and hecke_w_product(system, f, e) == e


def union_action(system):
    """Left action of H(W) on the disjoint union of the W^(s).

    Returns the carrier as (s, w) pairs and, per element of W, the tuple of
    carrier positions it sends each point to.
    """
    carrier = []
    for s in range(system.rank):
        for w in parabolic(system, maximal_parabolic(system, s)).max_reps:
            carrier.append((s, w))
    position = {point: i for i, point in enumerate(carrier)}
    actions = [
        tuple(position[(s, hecke_w_product(system, z, w))] for s, w in carrier)
        for z in range(len(system))
    ]
    return carrier, actions


def effective_on_sets(system):
    """Effectiveness of the action on the union of the ideals H(W)e_(s).

    Each of those ideals contains the zero z_{w0}; after gluing these points
    the carrier has v(W) - r(W) + 1 elements.
    """
    carrier, actions = union_action(system)
    return {
        'carrier_size': len(carrier),
        'vertex_count': vertex_count(system),
        'rank': system.rank,
        'effective': len(set(actions)) == len(system),
        'glued_degree': len(carrier) - system.rank + 1,
    }


def longest_coset_cover(system, s):
    """w0 s, the only element of W^(s) covered by w0, with D_L(w0 s) = S - {w0 s w0}."""
    w0 = system.longest
    candidate = system.right[w0][s]
    data = parabolic(system, maximal_parabolic(system, s))
    covered = [w for w in data.max_reps if system.lengths[w] == system.lengths[w0] - 1]
    conjugate = system.longest_conjugation()[s]
    return {
        'element': candidate,
        'in_max_reps': candidate in data.max_reps,
        'unique': covered == [candidate],
        'left_descents_match': system.left_descents(candidate) == system.generator_set - {conjugate},
    }
