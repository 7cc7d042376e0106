"""0-Hecke multiplication on z_w.

Multiplying by a generator moves up in weak order when that increases the
length and does nothing otherwise:
    e_i z_w = z_{s_i w} if l(s_i w) > l(w), else z_w,
and dually on the right.
"""

# Models
from api.hecke.models import HeckeElement, LEFT, RIGHT

# Perms
from api.perms.words import reduced_word

# Exceptions
from api.utils.exceptions import DegreeMismatch, InvalidInput


def hecke_generator_mul(i, z, side=LEFT):
    w = z.w
    if not 1 <= i < w.n:
        raise InvalidInput('e_{} does not exist in degree {}'.format(i, w.n))
    if side == LEFT:
        # s_i w is longer iff i comes before i + 1 in w
        if w.position(i) < w.position(i + 1):
            return HeckeElement(w.simple_times(i))
        return z
    if side == RIGHT:
        if w(i) < w(i + 1):
            return HeckeElement(w.times_simple(i))
        return z
    raise InvalidInput('unknown side {!r}'.format(side))


def hecke_word(letters, n):
    """z for the product e_i1 ... e_ik."""
    z = HeckeElement.identity(n)
    for letter in letters:
        z = hecke_generator_mul(letter, z, RIGHT)
    return z


def hecke_mul(a, b):
    """Fold a reduced word of b into a, one letter at a time."""
    if a.n != b.n:
        raise DegreeMismatch(a.n, b.n)
    z = a
    for letter in reduced_word(b.w).letters:
        z = hecke_generator_mul(letter, z, RIGHT)
    return z
