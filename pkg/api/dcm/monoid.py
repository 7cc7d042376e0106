"""DC_n as a MonoidTable, its idempotents, self-dual elements and vector actions."""

# Utilities
import logging

# Models
from api.boolmat.models import BoolMatrix
from api.dcm.models import DCElement
from api.perms.models import Direction, MonotoneMap

# Boolmat
from api.boolmat.closure import generate_monoid

# Dcm
from api.dcm.generators import epsilon_matrix

# Exceptions
from api.utils.exceptions import CapExceeded, InvalidInput

# Utils
from api.utils.config import dc_element_cap, dc_max_n


logger = logging.getLogger(__name__)


def check_degree(n, limit=None):
    limit = limit if limit is not None else dc_max_n()
    if n < 1:
        raise InvalidInput('degree must be positive')
    if n > limit:
        raise CapExceeded('degree {}'.format(n), limit)


def dc_monoid(n, cap=None, limit=None):
    """Closure of epsilon_1, ..., epsilon_{n-1} in B_n."""
    check_degree(n, limit)
    return generate_monoid(
        [epsilon_matrix(i, n) for i in range(1, n)],
        lambda a, b: a * b,
        BoolMatrix.identity(n),
        cap=cap if cap is not None else dc_element_cap(),
        name='DC_{}'.format(n),
    )


def dc_elements(table):
    """Elements of a DC_n table with their shortest words."""
    return [
        DCElement(matrix, (g + 1 for g in table.words[k]))
        for k, matrix in enumerate(table.elements)
    ]


def is_block_of_ones(matrix):
    """Direct sum of all-ones square blocks along the diagonal."""
    j = 1
    while j <= matrix.n:
        column = matrix.column(j)
        if min(column) != j:
            return False
        block = range(j, max(column) + 1)
        if any(matrix.column(k) != frozenset(block) for k in block):
            return False
        j = block[-1] + 1
    return True


def dc_idempotents(n, table=None):
    table = table if table is not None else dc_monoid(n)
    elements = dc_elements(table)
    return [elements[k] for k in table.idempotents()]


def self_dual_count(n, table=None):
    table = table if table is not None else dc_monoid(n)
    return sum(1 for matrix in table.elements if matrix.transpose() == matrix)


def motzkin_numbers(count):
    """M_0, ..., M_{count-1}, by M_{k+1} = M_k + sum M_i M_{k-1-i}."""
    numbers = [1]
    while len(numbers) < count:
        k = len(numbers) - 1
        numbers.append(numbers[k] + sum(numbers[i] * numbers[k - 1 - i] for i in range(k)))
    return numbers[:count]


def _segment(bits, n):
    members = [i for i in range(1, n + 1) if bits >> (i - 1) & 1]
    if not members or members[-1] - members[0] + 1 != len(members):
        raise InvalidInput('image is not a segment')
    return members[0], members[-1]


def vector_action(x):
    """Action of x on the characteristic vectors of initial and final segments.

    x v_j = v_{alpha(j)} for v_j the vector of {1..j}, and dually
    x v'_j = v'_{beta(j)} for v'_j the vector of {j..n}; returns (alpha, beta).
    """
    matrix = x.matrix if isinstance(x, DCElement) else x
    n = matrix.n
    initial, final = [], []
    for j in range(1, n + 1):
        # column vectors are unions of columns of the matrix
        head = 0
        tail = 0
        for i in range(1, n + 1):
            row = matrix.rows[i - 1]
            if row & ((1 << j) - 1):
                head |= 1 << (i - 1)
            if row >> (j - 1):
                tail |= 1 << (i - 1)
        low, high = _segment(head, n)
        if low != 1:
            raise InvalidInput('initial segment is not preserved')
        initial.append(high)
        low, high = _segment(tail, n)
        if high != n:
            raise InvalidInput('final segment is not preserved')
        final.append(low)
    return MonotoneMap(Direction.INCREASING, initial), MonotoneMap(Direction.DECREASING, final)
