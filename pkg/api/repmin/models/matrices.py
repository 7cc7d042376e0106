"""Dense matrices over the rationals or a prime field."""

# Utilities
import attr
from fractions import Fraction

# Exceptions
from api.utils.exceptions import DegreeMismatch, InvalidInput


def scalar(value, modulus=None):
    """Normalize ``value`` to a Fraction, or to a residue modulo ``modulus``."""
    value = Fraction(value)
    if modulus is None:
        return value
    if value.denominator % modulus == 0:
        raise InvalidInput('{} is not defined modulo {}'.format(value, modulus))
    return value.numerator * pow(value.denominator, -1, modulus) % modulus


def divide(a, b, modulus=None):
    if modulus is None:
        return a / b
    return a * pow(b, -1, modulus) % modulus


def format_scalar(value):
    return str(value)


def _check_modulus(instance, attribute, modulus):
    if modulus is None:
        return
    if modulus < 2 or any(modulus % d == 0 for d in range(2, int(modulus ** 0.5) + 1)):
        raise InvalidInput('{} is not a prime'.format(modulus))


def _rectangular(instance, attribute, rows):
    widths = {len(row) for row in rows}
    if len(widths) > 1:
        raise InvalidInput('rows of different lengths')


@attr.s(frozen=True, slots=True, repr=False)
class RationalMatrix:
    """Exact matrix; with a ``modulus`` its entries are residues modulo that prime."""

    rows = attr.ib(converter=lambda rows: tuple(tuple(row) for row in rows), validator=_rectangular)
    modulus = attr.ib(default=None, validator=_check_modulus)
    width = attr.ib(default=None)

    def __attrs_post_init__(self):
        normalized = tuple(tuple(scalar(v, self.modulus) for v in row) for row in self.rows)
        object.__setattr__(self, 'rows', normalized)
        if self.width is None:
            object.__setattr__(self, 'width', len(normalized[0]) if normalized else 0)
        elif normalized and len(normalized[0]) != self.width:
            raise InvalidInput('rows have {} entries, expected {}'.format(len(normalized[0]), self.width))

    @classmethod
    def identity(cls, size, modulus=None):
        return cls([[int(i == j) for j in range(size)] for i in range(size)], modulus, size)

    @classmethod
    def zero(cls, height, width, modulus=None):
        return cls([[0] * width for _ in range(height)], modulus, width)

    @classmethod
    def from_columns(cls, columns, height, modulus=None):
        """Matrix whose j-th column is ``columns[j]``."""
        return cls([[column[i] for column in columns] for i in range(height)], modulus, len(columns))

    @property
    def height(self):
        return len(self.rows)

    @property
    def shape(self):
        return self.height, self.width

    def _reduce(self, value):
        return value if self.modulus is None else value % self.modulus

    def _check_field(self, other):
        if self.modulus != other.modulus:
            raise InvalidInput('matrices over different fields')

    def __mul__(self, other):
        self._check_field(other)
        if self.width != other.height:
            raise DegreeMismatch(self.width, other.height)
        columns = list(zip(*other.rows)) if other.rows else [()] * other.width
        return RationalMatrix(
            [[self._reduce(sum(a * b for a, b in zip(row, column))) for column in columns] for row in self.rows],
            self.modulus,
            other.width,
        )

    def __add__(self, other):
        self._check_field(other)
        if self.shape != other.shape:
            raise DegreeMismatch(self.shape, other.shape)
        return RationalMatrix(
            [[self._reduce(a + b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
            self.modulus,
            self.width,
        )

    def __sub__(self, other):
        self._check_field(other)
        if self.shape != other.shape:
            raise DegreeMismatch(self.shape, other.shape)
        return RationalMatrix(
            [[self._reduce(a - b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
            self.modulus,
            self.width,
        )

    def apply(self, vector):
        """The column vector self * vector."""
        if len(vector) != self.width:
            raise DegreeMismatch(self.width, len(vector))
        return tuple(self._reduce(sum(a * b for a, b in zip(row, vector))) for row in self.rows)

    def stack(self, other):
        """Rows of self followed by rows of other."""
        self._check_field(other)
        if self.width != other.width:
            raise DegreeMismatch(self.width, other.width)
        return RationalMatrix(self.rows + other.rows, self.modulus, self.width)

    def transpose(self):
        return RationalMatrix(zip(*self.rows), self.modulus, self.height) if self.rows else \
            RationalMatrix.zero(self.width, 0, self.modulus)

    def is_zero(self):
        return all(v == 0 for row in self.rows for v in row)

    def lines(self):
        return [[format_scalar(v) for v in row] for row in self.rows]

    def __repr__(self):
        field = 'Q' if self.modulus is None else 'F{}'.format(self.modulus)
        return '<RationalMatrix {}x{} over {}>'.format(self.height, self.width, field)
