"""Gaussian elimination over the rationals or a prime field."""

# Models
from api.repmin.models import RationalMatrix
from api.repmin.models.matrices import divide


def row_echelon(matrix):
    """Reduced row echelon form and its pivot columns.

    Pivots are taken column by column, each time from the first row (in
    current order) with a nonzero entry, so the result only depends on the
    input.
    """
    modulus = matrix.modulus
    rows = [list(row) for row in matrix.rows]
    pivots = []
    r = 0
    for c in range(matrix.width):
        found = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if found is None:
            continue
        rows[r], rows[found] = rows[found], rows[r]
        pivot = rows[r][c]
        rows[r] = [divide(v, pivot, modulus) for v in rows[r]]
        for i in range(len(rows)):
            factor = rows[i][c]
            if i != r and factor != 0:
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
                if modulus is not None:
                    rows[i] = [a % modulus for a in rows[i]]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return RationalMatrix(rows, modulus, matrix.width), pivots


def rank(matrix):
    return len(row_echelon(matrix)[1])


def nullspace(matrix):
    """Basis of {v : matrix * v = 0}, one vector per free column.

    The vector of free column f has a 1 at f, zeros at the other free
    columns and minus the echelon entries at the pivots.
    """
    echelon, pivots = row_echelon(matrix)
    modulus = matrix.modulus
    basis = []
    for f in range(matrix.width):
        if f in pivots:
            continue
        vector = [0] * matrix.width
        vector[f] = 1
        for row, c in zip(echelon.rows, pivots):
            vector[c] = -row[f] if modulus is None else -row[f] % modulus
        basis.append(tuple(RationalMatrix([vector], modulus).rows[0]))
    return basis


def vectors_rank(vectors, size, modulus=None):
    """Dimension of the span of ``vectors`` in a space of dimension ``size``."""
    if not vectors:
        return 0
    return rank(RationalMatrix(vectors, modulus, size))


def in_span(vector, vectors, modulus=None):
    return vectors_rank(list(vectors) + [vector], len(vector), modulus) == vectors_rank(vectors, len(vector), modulus)
