"""Convex relations and their pair of Catalan maps."""

# Models
from api.boolmat.models import BoolMatrix, ConvexRelation
from api.boolmat.models.matrices import is_convex
from api.perms.models import Direction, MonotoneMap

# Exceptions
from api.utils.exceptions import DegreeMismatch, InvalidInput


__all__ = ['is_convex', 'max_map', 'min_map', 'theta', 'theta_inverse', 'theta_leq']


def _convex(a):
    if isinstance(a, ConvexRelation):
        return a.matrix
    return ConvexRelation(a).matrix


def max_map(a):
    """j -> max xi(j), an element of C_n^+."""
    matrix = _convex(a)
    return MonotoneMap(Direction.INCREASING, (max(column) for column in matrix.columns()))


def min_map(a):
    """j -> min xi(j), an element of C_n^-."""
    matrix = _convex(a)
    return MonotoneMap(Direction.DECREASING, (min(column) for column in matrix.columns()))


def theta(a):
    return max_map(a), min_map(a)


def theta_inverse(pair):
    """Convex relation with xi(j) = [beta(j), alpha(j)]."""
    alpha, beta = pair
    if alpha.n != beta.n:
        raise DegreeMismatch(alpha.n, beta.n)
    if alpha.direction is not Direction.INCREASING or beta.direction is not Direction.DECREASING:
        raise InvalidInput('expected a (non-decreasing, non-increasing) pair of maps')
    columns = [range(beta(j), alpha(j) + 1) for j in range(1, alpha.n + 1)]
    return ConvexRelation(BoolMatrix.from_columns(columns))


def theta_leq(a, b):
    """Order of C_n^+ x C_n^-: pointwise on max, reverse pointwise on min."""
    alpha_a, beta_a = theta(a)
    alpha_b, beta_b = theta(b)
    return alpha_a.leq(alpha_b) and beta_b.leq(beta_a)
