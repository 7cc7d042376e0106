"""Admissible pairs of Dyck paths."""

# Models
from api.dyck.models import PathPair
from api.perms.models import Permutation

# Dyck
from api.dyck.bijection import delta, delta_inverse
from api.dyck.kreweras import kreweras_derivative
from api.dyck.orders import h_order_prec

# Perms
from api.perms.statistics import alpha


def admissible_pair_of(w):
    """(Delta(alpha(w)), Delta(alpha(w^-1)))."""
    return PathPair(delta(alpha(w)), delta(alpha(w.inverse())))


def is_admissible(pair):
    """Both derivative conditions against the order on C_n^+."""
    first, second = pair.first, pair.second
    return (
        h_order_prec(delta_inverse(kreweras_derivative(first)), delta_inverse(second))
        and h_order_prec(delta_inverse(kreweras_derivative(second)), delta_inverse(first))
    )


def admissible_pairs(n):
    """Every pair realized by some permutation of degree n."""
    return frozenset(admissible_pair_of(w) for w in Permutation.all(n))
