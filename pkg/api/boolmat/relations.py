"""Operations of the semigroup B_n of binary relations."""

# Models
from api.boolmat.models import BoolMatrix


def bool_product(a, b):
    return a * b


def transpose(a):
    return a.transpose()


def relation_sum(a, b):
    """Entrywise OR."""
    return a | b


def permutation_matrix(w):
    """Matrix with M[i][j] = 1 iff i = w(j), so that Phi(u) Phi(w) = Phi(u * w)."""
    return BoolMatrix.from_columns([{w(j)} for j in range(1, w.n + 1)])
