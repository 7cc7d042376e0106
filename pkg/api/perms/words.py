"""Reduced words, length and descents."""

# Models
from api.perms.models import Permutation, ReducedWord

# Exceptions
from api.utils.exceptions import InvalidInput


LEFT = 'left'
RIGHT = 'right'


def length(w):
    return w.length


def evaluate_word(letters, n):
    """Product s_i1 * ... * s_ik of any (not necessarily reduced) word."""
    w = Permutation.identity(n)
    for letter in letters:
        if not 1 <= letter < n:
            raise InvalidInput('letter {} out of range for degree {}'.format(letter, n))
        w = w.times_simple(letter)
    return w


def reduced_word(w):
    """Reduced word of w.

    Repeatedly takes the largest value not yet in place and moves it one
    position to the right. Each such move removes a right descent, so the
    letters read backwards give a reduced word of w.
    """
    u = w
    letters = []
    value = w.n
    while value > 1:
        position = u.position(value)
        if position == value:
            value -= 1
            continue
        u = u.times_simple(position)
        letters.append(position)
    return ReducedWord(w.n, reversed(letters))


def descents(w, side=RIGHT):
    """Right descents {i : w(i) > w(i+1)} or left descents {i : i+1 precedes i}."""
    if side == RIGHT:
        return frozenset(i for i in range(1, w.n) if w(i) > w(i + 1))
    if side == LEFT:
        return frozenset(i for i in range(1, w.n) if w.position(i) > w.position(i + 1))
    raise InvalidInput('unknown descent side {!r}'.format(side))
