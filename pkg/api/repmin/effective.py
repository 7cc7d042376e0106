"""Effectiveness of module actions and the minimal dimension reports."""

# Utilities
import logging

# Coxeter
from api.coxeter.builders import type_a
from api.coxeter.complex import vertex_count

# Dcm
from api.dcm.generators import word_matrix

# Repmin
from api.repmin.modules import build_P, direct_sum, relations_check, split_P
from api.repmin.socle import simple_socle

# Exceptions
from api.utils.exceptions import InvalidInput


logger = logging.getLogger(__name__)


def element_matrices(system, module):
    """Matrix of every z_w, extending the matrix of a shorter prefix by one generator."""
    by_word = {(): 0}
    matrices = [None] * len(system)
    matrices[0] = module.word_matrix(())
    for k in range(1, len(system)):
        word = system.words[k]
        by_word[word] = k
        matrices[k] = matrices[by_word[word[:-1]]] * module.action(word[-1])
    return matrices


def effective_check(system, module):
    """Distinct elements of H(W) act by distinct matrices."""
    return len(set(element_matrices(system, module))) == len(system)


def prime_sum(system, generators=None, modulus=None):
    """The direct sum of the P'_(s) over the given generators (all of S by default)."""
    generators = range(system.rank) if generators is None else generators
    return direct_sum([split_P(build_P(system, s, modulus))[0] for s in generators])


def min_dim_report(system, modulus=None):
    """v(W) - r(W) against the effective module built from the P'_(s)."""
    claimed = vertex_count(system) - system.rank
    module = prime_sum(system, modulus=modulus)
    report = {
        'system': system.name,
        'claimed': claimed,
        'constructed_dim': module.dimension,
        'effective': effective_check(system, module),
        'relations': relations_check(module),
        'socle_verified': all(simple_socle(system, s, modulus)['holds'] for s in range(system.rank)),
    }
    if claimed != module.dimension or not report['effective']:
        logger.warning('%s: minimal dimension check failed: %s', system.name, report)
    return report


def dc_min_dim_check(n, modulus=None):
    """P'_(s_1) + P'_(s_{n-1}) as a module of DC_n.

    The action of H_n has to factor through Psi, and the quotient has to
    act faithfully.
    """
    if n < 2:
        raise InvalidInput('the double Catalan module needs degree at least 2')
    system = type_a(n - 1)
    module = prime_sum(system, generators=[0, n - 2], modulus=modulus)
    images = {}
    for w, matrix in enumerate(element_matrices(system, module)):
        key = word_matrix([s + 1 for s in system.words[w]], n)
        images.setdefault(key, set()).add(matrix)
    factors = all(len(matrices) == 1 for matrices in images.values())
    distinct = {next(iter(matrices)) for matrices in images.values()}
    report = {
        'n': n,
        'dim': module.dimension,
        'expected_dim': 2 * n - 2,
        'dc_size': len(images),
        'factors': factors,
        'effective': factors and len(distinct) == len(images),
    }
    if not report['effective']:
        logger.warning('DC_%d: module of dimension %d is not effective', n, module.dimension)
    return report
