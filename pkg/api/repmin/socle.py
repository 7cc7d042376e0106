"""Socles of H(W)-modules.

Every simple H(W)-module is one dimensional, theta_J for some J in S: e_t
acts by 1 for t in J and by 0 otherwise. The socle is therefore the sum of
the common eigenspaces, one for each J.
"""

# Utilities
import itertools

# Models
from api.repmin.models import RationalMatrix, SocleComponent, SocleReport

# Repmin
from api.repmin.linalg import in_span, nullspace
from api.repmin.modules import build_P, split_P


def theta_space(module, J):
    """Basis of {v : e_t v = v for t in J, e_t v = 0 for t not in J}."""
    identity = RationalMatrix.identity(module.dimension, module.modulus)
    equations = RationalMatrix.zero(0, module.dimension, module.modulus)
    for t, matrix in enumerate(module.actions):
        equations = equations.stack(matrix - identity if t in J else matrix)
    return nullspace(equations)


def socle(module):
    components = []
    rank = module.system.rank
    for size in range(rank + 1):
        for J in itertools.combinations(range(rank), size):
            basis = theta_space(module, frozenset(J))
            if basis:
                components.append(SocleComponent(J=J, basis=basis))
    return SocleReport(module=module, components=components)


def socle_dimensions(module):
    return {component.J: component.dimension for component in socle(module).components}


def simple_socle(system, s, modulus=None):
    """Socle of P'_(s) against the line k(z_{w0 s} - z_{w0}) of type theta_{S - {w0 s w0}}."""
    prime, _ = split_P(build_P(system, s, modulus))
    report = socle(prime)
    w0 = system.longest
    expected_type = system.generator_set - {system.longest_conjugation()[s]}
    elements = [label[0][0] for label in prime.basis]
    expected = prime.basis_vector(elements.index(system.right[w0][s]))
    spanned = report.is_simple() and in_span(expected, report.components[0].basis, modulus)
    found_type = report.components[0].J if report.is_simple() else None
    return {
        'generator': s,
        'dimension': report.dimension,
        'type': found_type,
        'expected_type': expected_type,
        'spanned_by_expected': spanned,
        'holds': spanned and found_type == expected_type,
    }
