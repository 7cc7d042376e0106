"""Generalized Catalan and double Catalan quotients of H(W)."""

# Models
from api.boolmat.models import BoolMatrix

# Boolmat
from api.boolmat.closure import generate_monoid

# Coxeter
from api.coxeter.hecke import hecke_w_mul
from api.coxeter.parabolics import coset_action, cosets, parabolic


def _compose_transformations(a, b):
    """Apply b first."""
    return tuple(a[x] for x in b)


def catalan_generators(system, J):
    """Maps z -> e_s z on W^J, one tuple of positions per generator."""
    reps = parabolic(system, J).max_reps
    position = {w: i for i, w in enumerate(reps)}
    return reps, [
        tuple(position[hecke_w_mul(system, s, w)] for w in reps)
        for s in range(system.rank)
    ]


def generalized_catalan_quotient(system, J, cap=None):
    """Transformation monoid of H(W) acting on the left ideal H(W)e_J."""
    reps, generators = catalan_generators(system, J)
    return generate_monoid(
        generators,
        _compose_transformations,
        tuple(range(len(reps))),
        cap=cap,
        name='C({})_J'.format(system.name),
    )


def double_catalan_generators(system, J):
    """I + Phi(rho(s)) for each s, rho being the action on cosets."""
    size = len(cosets(system, J))
    identity = BoolMatrix.identity(size)
    result = []
    for s in range(system.rank):
        images = coset_action(system, J, s)
        result.append(identity | BoolMatrix.from_columns([{images[j] + 1} for j in range(size)]))
    return result


def generalized_double_catalan(system, J, cap=None):
    generators = double_catalan_generators(system, J)
    size = len(cosets(system, J))
    return generate_monoid(
        generators,
        lambda a, b: a * b,
        BoolMatrix.identity(size),
        cap=cap,
        name='DC({})_J'.format(system.name),
    )
