"""Elements of the double Catalan monoid DC_n."""

# Utilities
import attr

# Models
from api.boolmat.models import BoolMatrix


@attr.s(frozen=True, slots=True, order=False, repr=False)
class DCElement:
    """Convex relation in the monoid generated by the epsilon_i.

    ``word`` is a witness, letters numbered from 1; equality only looks at
    the matrix.
    """

    matrix = attr.ib(validator=attr.validators.instance_of(BoolMatrix))
    word = attr.ib(default=(), converter=tuple, eq=False)

    @property
    def n(self):
        return self.matrix.n

    def __mul__(self, other):
        return DCElement(self.matrix * other.matrix, self.word + other.word)

    def transpose(self):
        return DCElement(self.matrix.transpose(), reversed(self.word))

    def __str__(self):
        return str(self.matrix)

    def __repr__(self):
        return 'DCElement({})'.format('/'.join(self.matrix.lines()))
