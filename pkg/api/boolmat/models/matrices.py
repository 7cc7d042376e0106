"""Boolean matrices.

Row i is stored as an integer whose bit j - 1 is the entry M[i][j]. Row
and column indices run over 1..n.
"""

# Utilities
import attr

# Exceptions
from api.utils.exceptions import DegreeMismatch, InvalidInput


def _rows_fit(instance, attribute, rows):
    limit = 1 << len(rows)
    if any(row < 0 or row >= limit for row in rows):
        raise InvalidInput('row bits exceed the degree {}'.format(len(rows)))


@attr.s(frozen=True, slots=True, order=True, repr=False)
class BoolMatrix:
    """n x n matrix over the boolean semiring, i.e. a binary relation on {1..n}."""

    rows = attr.ib(converter=tuple, validator=_rows_fit)

    @property
    def n(self):
        return len(self.rows)

    @classmethod
    def identity(cls, n):
        return cls(1 << i for i in range(n))

    @classmethod
    def zero(cls, n):
        return cls([0] * n)

    @classmethod
    def full(cls, n):
        return cls([(1 << n) - 1] * n)

    @classmethod
    def from_strings(cls, lines):
        """Build from lines of '0'/'1' characters, first character = column 1."""
        lines = [line.strip() for line in lines if line.strip()]
        n = len(lines)
        rows = []
        for line in lines:
            if len(line) != n or set(line) - {'0', '1'}:
                raise InvalidInput('bad matrix row {!r}'.format(line))
            rows.append(sum(1 << j for j, char in enumerate(line) if char == '1'))
        return cls(rows)

    @classmethod
    def from_columns(cls, columns):
        """Build from the column sets xi(1), ..., xi(n)."""
        n = len(columns)
        rows = [0] * n
        for j, column in enumerate(columns):
            for i in column:
                if not 1 <= i <= n:
                    raise InvalidInput('row index {} out of range'.format(i))
                rows[i - 1] |= 1 << j
        return cls(rows)

    def entry(self, i, j):
        return bool(self.rows[i - 1] >> (j - 1) & 1)

    def row(self, i):
        bits = self.rows[i - 1]
        return frozenset(j for j in range(1, self.n + 1) if bits >> (j - 1) & 1)

    def column(self, j):
        """The set xi(j) = {i : M[i][j] = 1}."""
        mask = 1 << (j - 1)
        return frozenset(i for i, bits in enumerate(self.rows, 1) if bits & mask)

    def columns(self):
        return [self.column(j) for j in range(1, self.n + 1)]

    def __mul__(self, other):
        if self.n != other.n:
            raise DegreeMismatch(self.n, other.n)
        others = other.rows
        product = []
        for bits in self.rows:
            acc = 0
            s = 0
            while bits:
                if bits & 1:
                    acc |= others[s]
                bits >>= 1
                s += 1
            product.append(acc)
        return BoolMatrix(product)

    def __or__(self, other):
        if self.n != other.n:
            raise DegreeMismatch(self.n, other.n)
        return BoolMatrix(a | b for a, b in zip(self.rows, other.rows))

    def transpose(self):
        return BoolMatrix.from_columns([self.row(i) for i in range(1, self.n + 1)])

    def issubset(self, other):
        """Entrywise inclusion."""
        if self.n != other.n:
            raise DegreeMismatch(self.n, other.n)
        return all(a & ~b == 0 for a, b in zip(self.rows, other.rows))

    def lines(self):
        return [
            ''.join('1' if bits >> j & 1 else '0' for j in range(self.n))
            for bits in self.rows
        ]

    def key(self):
        """Row-major bit string."""
        return ''.join(self.lines())

    def __str__(self):
        return '\n'.join(self.lines())

    def __repr__(self):
        return 'BoolMatrix({})'.format('/'.join(self.lines()))


def _is_interval(indices):
    return not indices or max(indices) - min(indices) + 1 == len(indices)


def is_convex(matrix):
    """Reflexive, with every row and column support an interval."""
    n = matrix.n
    if not all(matrix.entry(i, i) for i in range(1, n + 1)):
        return False
    for k in range(1, n + 1):
        if not _is_interval(matrix.row(k)) or not _is_interval(matrix.column(k)):
            return False
    return True


def _must_be_convex(instance, attribute, matrix):
    if not is_convex(matrix):
        raise InvalidInput('matrix is not a convex relation:\n{}'.format(matrix))


@attr.s(frozen=True, slots=True)
class ConvexRelation:
    matrix = attr.ib(validator=_must_be_convex)

    @property
    def n(self):
        return self.matrix.n
