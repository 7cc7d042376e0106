"""Bruhat order on a finite Coxeter group."""


def bruhat_ideal(system, w):
    """Products of all subwords of a reduced word of w."""
    found = {0}
    for s in system.words[w]:
        found |= {system.right[u][s] for u in found}
    return frozenset(found)


def bruhat_leq(system, u, w):
    return u in bruhat_ideal(system, w)
