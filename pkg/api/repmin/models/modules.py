"""Finite dimensional left modules of the 0-Hecke monoid H(W)."""

# Utilities
import attr

# Models
from .matrices import RationalMatrix

# Exceptions
from api.utils.exceptions import DegreeMismatch, InvalidInput


def _square_actions(instance, attribute, actions):
    size = len(instance.basis)
    if len(actions) != instance.system.rank:
        raise InvalidInput('{} generator matrices for rank {}'.format(len(actions), instance.system.rank))
    for matrix in actions:
        if matrix.shape != (size, size):
            raise DegreeMismatch((size, size), matrix.shape)
        if matrix.modulus != instance.modulus:
            raise InvalidInput('generator matrix over the wrong field')


@attr.s(frozen=True, slots=True, repr=False)
class HeckeModule:
    """H(W)-module given by the matrices of the generators e_s.

    ``basis`` lists one label per basis vector. A label is a tuple of
    (element index, coefficient) pairs naming the vector as a combination
    of the z_w; in direct sums it is prefixed by the summand name.
    """

    system = attr.ib()
    name = attr.ib()
    basis = attr.ib(converter=tuple)
    actions = attr.ib(converter=tuple, validator=_square_actions)
    modulus = attr.ib(default=None)

    @property
    def dimension(self):
        return len(self.basis)

    def action(self, s):
        return self.actions[s]

    def word_matrix(self, letters):
        """Matrix of e_{s1} ... e_{sk}."""
        matrix = RationalMatrix.identity(self.dimension, self.modulus)
        for s in letters:
            matrix = matrix * self.actions[s]
        return matrix

    def basis_vector(self, k):
        return tuple(int(i == k) for i in range(self.dimension))

    def __repr__(self):
        return '<HeckeModule {} of dimension {}>'.format(self.name, self.dimension)


@attr.s(frozen=True, slots=True)
class SocleComponent:
    """Vectors spanning the theta_J-isotypic part: e_t v = v for t in J, 0 otherwise."""

    J = attr.ib(converter=frozenset)
    basis = attr.ib(converter=tuple)

    @property
    def dimension(self):
        return len(self.basis)


@attr.s(frozen=True, slots=True)
class SocleReport:

    module = attr.ib()
    components = attr.ib(converter=tuple)

    @property
    def dimension(self):
        return sum(component.dimension for component in self.components)

    def is_simple(self):
        return self.dimension == 1

    def types(self):
        return [component.J for component in self.components]
