"""Bruhat order on the symmetric group."""

# Utilities
import itertools

# Exceptions
from api.utils.exceptions import DegreeMismatch

# Perms
from api.perms.words import evaluate_word, reduced_word


def bruhat_leq(u, w):
    """Tableau criterion: every sorted prefix of u is dominated by that of w."""
    if u.n != w.n:
        raise DegreeMismatch(u.n, w.n)
    if u.length > w.length:
        return False
    for i in range(1, u.n):
        left = sorted(u.values[:i])
        right = sorted(w.values[:i])
        if any(a > b for a, b in zip(left, right)):
            return False
    return True


def bruhat_leq_subword(u, w):
    """Subword property, checked against one reduced word of w.

    Exponential in the length of w, kept as an oracle for bruhat_leq.
    """
    if u.n != w.n:
        raise DegreeMismatch(u.n, w.n)
    letters = reduced_word(w).letters
    target = u.length
    for positions in itertools.combinations(range(len(letters)), target):
        subword = [letters[p] for p in positions]
        if evaluate_word(subword, w.n) == u:
            return True
    return False
