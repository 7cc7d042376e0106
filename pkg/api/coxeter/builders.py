"""Construction of Coxeter systems from faithful permutation models."""

# Utilities
import logging
import re

# Models
from api.coxeter.models import CoxeterSystem
from api.coxeter.models.systems import compose_images
from api.perms.models import parse_values

# Exceptions
from api.utils.exceptions import CapExceeded, CoxeterMatrixError, InvalidInput

# Utils
from api.utils.config import element_cap


logger = logging.getLogger(__name__)

TYPE_PATTERN = re.compile(r'^\s*(?:([AB])\s*(\d+)|I2\s*[:(]\s*(\d+)\s*\)?)\s*$', re.IGNORECASE)


def _transposition(size, *pairs):
    images = list(range(size))
    for a, b in pairs:
        images[a], images[b] = images[b], images[a]
    return tuple(images)


def _chain_matrix(rank, first_order=3):
    """Coxeter matrix of a path diagram; the first edge may carry another label."""
    matrix = [[2] * rank for _ in range(rank)]
    for s in range(rank):
        matrix[s][s] = 1
        if s + 1 < rank:
            order = first_order if s == 0 else 3
            matrix[s][s + 1] = matrix[s + 1][s] = order
    return matrix


def type_a(k, cap=None):
    """A_k = S_{k+1} acting on k + 1 points, s_i swapping points i and i + 1."""
    if k < 1:
        raise InvalidInput('A_k needs k >= 1')
    generators = [_transposition(k + 1, (i, i + 1)) for i in range(k)]
    return from_generators(generators, _chain_matrix(k), name='A{}'.format(k), cap=cap)


def type_b(k, cap=None):
    """B_k acting on the 2k signed points +1..+k, -1..-k.

    Point x >= 0 stands for +(x + 1) and point k + x for -(x + 1); s_0
    changes the sign of 1 and s_i swaps i and i + 1 (with their negatives).
    """
    if k < 2:
        raise InvalidInput('B_k needs k >= 2')
    generators = [_transposition(2 * k, (0, k))]
    generators += [_transposition(2 * k, (i - 1, i), (k + i - 1, k + i)) for i in range(1, k)]
    return from_generators(generators, _chain_matrix(k, first_order=4), name='B{}'.format(k), cap=cap)


def dihedral(m, cap=None):
    """I2(m) acting on Z/2m by the reflections x -> 1 - x and x -> -1 - x."""
    if m < 2:
        raise InvalidInput('I2(m) needs m >= 2')
    size = 2 * m
    s = tuple((1 - x) % size for x in range(size))
    t = tuple((-1 - x) % size for x in range(size))
    return from_generators([s, t], [[1, m], [m, 1]], name='I2:{}'.format(m), cap=cap)


def _order(images):
    identity = tuple(range(len(images)))
    current, order = images, 1
    while current != identity:
        current = compose_images(current, images)
        order += 1
    return order


def validate_matrix(generators, matrix):
    rank = len(generators)
    if len(matrix) != rank or any(len(row) != rank for row in matrix):
        raise CoxeterMatrixError('Coxeter matrix must be {0} x {0}'.format(rank))
    sizes = {len(g) for g in generators}
    if len(sizes) != 1:
        raise CoxeterMatrixError('generators act on carriers of different sizes')
    for s in range(rank):
        for t in range(rank):
            if matrix[s][t] != matrix[t][s]:
                raise CoxeterMatrixError('Coxeter matrix is not symmetric')
            expected = matrix[s][t]
            if s == t:
                if expected != 1 or _order(generators[s]) != 2:
                    raise CoxeterMatrixError('generator {} is not an involution'.format(s + 1))
                continue
            found = _order(compose_images(generators[s], generators[t]))
            if found != expected:
                raise CoxeterMatrixError(
                    '(s{}s{}) has order {}, expected {}'.format(s + 1, t + 1, found, expected)
                )


def from_generators(generators, matrix, name='W', cap=None):
    """Breadth-first enumeration of the group generated by ``generators``."""
    generators = [tuple(g) for g in generators]
    matrix = [list(row) for row in matrix]
    validate_matrix(generators, matrix)
    cap = cap if cap is not None else element_cap()
    identity = tuple(range(len(generators[0])))
    elements = [identity]
    index = {identity: 0}
    lengths = [0]
    words = [()]
    right = []
    k = 0
    while k < len(elements):
        edges = []
        for s, generator in enumerate(generators):
            target = compose_images(elements[k], generator)
            found = index.get(target)
            if found is None:
                found = len(elements)
                if found >= cap:
                    logger.warning('%s: group enumeration stopped at %d elements', name, cap)
                    raise CapExceeded(name, cap)
                index[target] = found
                elements.append(target)
                lengths.append(lengths[k] + 1)
                words.append(words[k] + (s,))
            edges.append(found)
        right.append(tuple(edges))
        k += 1
    left = [
        tuple(index[compose_images(generator, element)] for generator in generators)
        for element in elements
    ]
    logger.debug('%s: %d elements', name, len(elements))
    return CoxeterSystem(
        name=name,
        generators=tuple(generators),
        coxeter_matrix=tuple(tuple(row) for row in matrix),
        elements=elements,
        lengths=lengths,
        words=words,
        right=right,
        left=left,
    )


def build_coxeter(description, cap=None):
    """Build from "A4", "B3", "I2:6" or a dict with "generators" and "matrix".

    Explicit generators are one-line permutations of 1..N, as strings or lists.
    """
    if isinstance(description, dict):
        try:
            raw_generators, matrix = description['generators'], description['matrix']
        except KeyError as error:
            raise InvalidInput('missing key {}'.format(error))
        generators = []
        for raw in raw_generators:
            if isinstance(raw, str):
                raw = parse_values(raw)
            if sorted(raw) != list(range(1, len(raw) + 1)):
                raise InvalidInput('{} is not a permutation'.format(raw))
            generators.append(tuple(v - 1 for v in raw))
        if not generators:
            raise InvalidInput('at least one generator is required')
        return from_generators(generators, matrix, name=description.get('name', 'W'), cap=cap)
    match = TYPE_PATTERN.match(str(description))
    if not match:
        raise InvalidInput('unknown Coxeter type {!r}'.format(description))
    family, rank, order = match.groups()
    if order is not None:
        return dihedral(int(order), cap=cap)
    if family.upper() == 'A':
        return type_a(int(rank), cap=cap)
    return type_b(int(rank), cap=cap)
