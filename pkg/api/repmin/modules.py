"""The projective modules P_(s) = H(W)e_(s) and their summands."""

# Utilities
import logging

# Models
from api.hecke.models import LEFT
from api.repmin.models import HeckeModule, RationalMatrix

# Coxeter
from api.coxeter.hecke import hecke_w_mul
from api.coxeter.parabolics import maximal_parabolic, parabolic

# Exceptions
from api.utils.exceptions import InvalidInput


logger = logging.getLogger(__name__)


def _column_targets(matrix):
    """Row of the single 1 in each column, None for a zero column."""
    targets = []
    for j in range(matrix.width):
        rows = [i for i in range(matrix.height) if matrix.rows[i][j] != 0]
        if len(rows) > 1 or (rows and matrix.rows[rows[0]][j] != 1):
            raise InvalidInput('generator matrix is not a partial 0/1 map')
        targets.append(rows[0] if rows else None)
    return targets


def _map_matrix(targets, size, modulus):
    rows = [[0] * len(targets) for _ in range(size)]
    for j, target in enumerate(targets):
        if target is not None:
            rows[target][j] = 1
    return RationalMatrix(rows, modulus, len(targets))


def build_P(system, s, modulus=None):
    """P_(s) with basis {z_w : w in W^(s)}; e_t z_w = z_tw if l(tw) > l(w), else z_w."""
    data = parabolic(system, maximal_parabolic(system, s))
    reps = list(data.max_reps)
    position = {w: k for k, w in enumerate(reps)}
    actions = [
        _map_matrix([position[hecke_w_mul(system, t, w, LEFT)] for w in reps], len(reps), modulus)
        for t in range(system.rank)
    ]
    return HeckeModule(
        system=system,
        name='P({})'.format(s + 1),
        basis=[((w, 1),) for w in reps],
        actions=actions,
        modulus=modulus,
    )


def element_basis(module):
    if any(len(label) != 1 or label[0][1] != 1 for label in module.basis):
        raise InvalidInput('{} is not spanned by elements z_w'.format(module.name))
    return [label[0][0] for label in module.basis]


def split_P(module):
    """P_(s) = H(W)(e_(s) - e_0) + k e_0, e_0 = z_{w0} being the zero of H(W).

    The first summand has basis z_w - z_{w0} for w in W^(s) other than w0.
    """
    system = module.system
    elements = element_basis(module)
    w0 = system.longest
    if w0 not in elements:
        raise InvalidInput('{} does not contain z_w0'.format(module.name))
    kept = [k for k, w in enumerate(elements) if w != w0]
    position = {k: i for i, k in enumerate(kept)}
    actions = []
    for matrix in module.actions:
        targets = _column_targets(matrix)
        # z_w0 - z_w0 = 0
        actions.append(_map_matrix([position.get(targets[k]) for k in kept], len(kept), module.modulus))
    prime = HeckeModule(
        system=system,
        name=module.name.replace('P', "P'", 1),
        basis=[((elements[k], 1), (w0, -1)) for k in kept],
        actions=actions,
        modulus=module.modulus,
    )
    trivial = HeckeModule(
        system=system,
        name='k z_w0',
        basis=[((w0, 1),)],
        actions=[RationalMatrix.identity(1, module.modulus)] * system.rank,
        modulus=module.modulus,
    )
    return prime, trivial


def direct_sum(modules, name=None):
    """Block diagonal action on the concatenated bases."""
    modules = list(modules)
    if not modules:
        raise InvalidInput('empty direct sum')
    system, modulus = modules[0].system, modules[0].modulus
    if any(m.system is not system or m.modulus != modulus for m in modules):
        raise InvalidInput('summands over different systems or fields')
    size = sum(m.dimension for m in modules)
    actions = []
    for s in range(system.rank):
        rows = []
        offset = 0
        for m in modules:
            for row in m.actions[s].rows:
                rows.append([0] * offset + list(row) + [0] * (size - offset - m.dimension))
            offset += m.dimension
        actions.append(RationalMatrix(rows, modulus, size))
    return HeckeModule(
        system=system,
        name=name or ' + '.join(m.name for m in modules),
        basis=[(m.name, label) for m in modules for label in m.basis],
        actions=actions,
        modulus=modulus,
    )


def _alternating(module, s, t, length):
    return module.word_matrix([s if k % 2 == 0 else t for k in range(length)])


def relations_check(module):
    """Idempotence, and the braid relation of length m_st for each pair s != t."""
    matrix = module.system.coxeter_matrix
    for s, action in enumerate(module.actions):
        if action * action != action:
            logger.warning('%s: e_%d is not idempotent', module.name, s + 1)
            return False
    for s in range(module.system.rank):
        for t in range(s + 1, module.system.rank):
            m = matrix[s][t]
            if _alternating(module, s, t, m) != _alternating(module, t, s, m):
                logger.warning('%s: braid relation of e_%d, e_%d fails', module.name, s + 1, t + 1)
                return False
    return True


def label_text(system, label):
    """'z[1.2] - z[e]' style text for a basis label."""
    if label and isinstance(label[0], str):
        return '{}: {}'.format(label[0], label_text(system, label[1]))
    parts = []
    for w, coefficient in label:
        term = 'z[{}]'.format(system.element_label(w))
        if not parts:
            parts.append(term if coefficient == 1 else '{} {}'.format(coefficient, term))
        elif coefficient == -1:
            parts.append('- ' + term)
        else:
            parts.append('+ {} {}'.format(coefficient, term))
    return ' '.join(parts)
