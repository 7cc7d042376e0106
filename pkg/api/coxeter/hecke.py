"""Arithmetic of the 0-Hecke monoid H(W) on element indices."""

# Models
from api.hecke.models import LEFT, RIGHT

# Exceptions
from api.utils.exceptions import InvalidInput


def hecke_w_mul(system, s, z, side=LEFT):
    """e_s z_w = z_{sw} if l(sw) > l(w), else z_w; dually on the right."""
    if not 0 <= s < system.rank:
        raise InvalidInput('generator {} does not exist in rank {}'.format(s + 1, system.rank))
    if side == LEFT:
        target = system.left[z][s]
    elif side == RIGHT:
        target = system.right[z][s]
    else:
        raise InvalidInput('unknown side {!r}'.format(side))
    if system.lengths[target] > system.lengths[z]:
        return target
    return z


def hecke_w_product(system, a, b):
    """z_a z_b, folding a reduced word of b into a."""
    for s in system.words[b]:
        a = hecke_w_mul(system, s, a, RIGHT)
    return a


def hecke_w_word(system, letters):
    z = 0
    for s in letters:
        z = hecke_w_mul(system, s, z, RIGHT)
    return z
