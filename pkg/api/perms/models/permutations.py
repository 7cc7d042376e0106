"""Permutations in one-line notation."""

# Utilities
import attr
import itertools

# Exceptions
from api.utils.exceptions import DegreeMismatch, InvalidInput


def format_values(values):
    """Digit string for degrees up to 9, comma separated above."""
    if len(values) <= 9:
        return ''.join(str(v) for v in values)
    return ','.join(str(v) for v in values)


def parse_values(text):
    """Inverse of format_values."""
    text = text.strip()
    if not text:
        raise InvalidInput('empty value list')
    try:
        if ',' in text:
            return tuple(int(part) for part in text.split(','))
        return tuple(int(char) for char in text)
    except ValueError:
        raise InvalidInput('cannot parse {!r}'.format(text))


def _is_bijection(instance, attribute, values):
    if not values or sorted(values) != list(range(1, len(values) + 1)):
        raise InvalidInput('{} is not a permutation of 1..{}'.format(values, len(values)))


@attr.s(frozen=True, slots=True, order=True, repr=False)
class Permutation:
    """Bijection of {1..n}, stored as its one-line notation.

    Composition applies the right factor first: (u * w)(j) = u(w(j)).
    """

    values = attr.ib(converter=tuple, validator=_is_bijection)

    @property
    def n(self):
        return len(self.values)

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def simple(cls, i, n):
        """The simple transposition s_i swapping i and i + 1."""
        if not 1 <= i < n:
            raise InvalidInput('s_{} does not exist in degree {}'.format(i, n))
        values = list(range(1, n + 1))
        values[i - 1], values[i] = values[i], values[i - 1]
        return cls(values)

    @classmethod
    def longest(cls, n):
        return cls(range(n, 0, -1))

    @classmethod
    def parse(cls, text):
        return cls(parse_values(text))

    @classmethod
    def all(cls, n):
        """Every permutation of degree n in lexicographic order."""
        for values in itertools.permutations(range(1, n + 1)):
            yield cls(values)

    def __call__(self, j):
        return self.values[j - 1]

    def __mul__(self, other):
        return compose(self, other)

    def __str__(self):
        return format_values(self.values)

    def __repr__(self):
        return 'Permutation({})'.format(self)

    def is_identity(self):
        return all(v == i for i, v in enumerate(self.values, 1))

    def inverse(self):
        return invert(self)

    def position(self, value):
        """Index j with w(j) = value."""
        return self.values.index(value) + 1

    def times_simple(self, i):
        """w * s_i, which swaps the entries at positions i and i + 1."""
        values = list(self.values)
        values[i - 1], values[i] = values[i], values[i - 1]
        return Permutation(values)

    def simple_times(self, i):
        """s_i * w, which swaps the values i and i + 1."""
        swap = {i: i + 1, i + 1: i}
        return Permutation(swap.get(v, v) for v in self.values)

    @property
    def length(self):
        """Coxeter length, i.e. the number of inversions."""
        values = self.values
        return sum(
            1
            for a in range(len(values))
            for b in range(a + 1, len(values))
            if values[a] > values[b]
        )


def compose(u, w):
    """Return u * w, the permutation j -> u(w(j))."""
    if u.n != w.n:
        raise DegreeMismatch(u.n, w.n)
    return Permutation(u.values[v - 1] for v in w.values)


def invert(w):
    values = [0] * w.n
    for j, v in enumerate(w.values, 1):
        values[v - 1] = j
    return Permutation(values)


def parse_permutation(text):
    return Permutation(parse_values(text))


def format_permutation(w):
    return format_values(w.values)


def _letters_in_range(instance, attribute, letters):
    for letter in letters:
        if not 1 <= letter < instance.n:
            raise InvalidInput('letter {} out of range for degree {}'.format(letter, instance.n))


@attr.s(frozen=True, slots=True)
class ReducedWord:
    """Indices (i1, ..., ik) of simple transpositions with w = s_i1 * ... * s_ik."""

    n = attr.ib()
    letters = attr.ib(converter=tuple, validator=_letters_in_range)

    def __attrs_post_init__(self):
        if self.evaluate().length != len(self.letters):
            raise InvalidInput('{} is not a reduced word'.format(self.letters))

    def __len__(self):
        return len(self.letters)

    def evaluate(self):
        w = Permutation.identity(self.n)
        for letter in self.letters:
            w = w.times_simple(letter)
        return w
