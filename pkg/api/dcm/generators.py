"""The generators epsilon_i and the projection Psi: H_n -> DC_n."""

# Utilities
import logging

# Models
from api.boolmat.models import BoolMatrix
from api.dcm.models import DCElement
from api.perms.models import Permutation

# Boolmat
from api.boolmat.convex import theta_inverse
from api.boolmat.relations import permutation_matrix

# Perms
from api.perms.statistics import alpha, beta
from api.perms.words import reduced_word

# Exceptions
from api.utils.exceptions import InternalInconsistency, InvalidInput


logger = logging.getLogger(__name__)


def epsilon_matrix(i, n):
    """Phi(id) + Phi(s_i)."""
    if not 1 <= i < n:
        raise InvalidInput('epsilon_{} does not exist in degree {}'.format(i, n))
    return BoolMatrix.identity(n) | permutation_matrix(Permutation.simple(i, n))


def epsilon(i, n):
    return DCElement(epsilon_matrix(i, n), (i,))


def word_matrix(letters, n):
    matrix = BoolMatrix.identity(n)
    for letter in letters:
        matrix = matrix * epsilon_matrix(letter, n)
    return matrix


def psi(w):
    """Psi(z_w), computed from alpha_w and beta_w and checked against a reduced word."""
    word = reduced_word(w).letters
    matrix = theta_inverse((alpha(w), beta(w))).matrix
    product = word_matrix(word, w.n)
    if product != matrix:
        logger.error('Psi(z_%s): epsilon product and interval fill disagree', w)
        raise InternalInconsistency(
            'Psi(z_{}) differs between its two constructions'.format(w),
            witness={'w': str(w), 'interval_fill': matrix.lines(), 'epsilon_product': product.lines()},
        )
    return DCElement(matrix, word)
