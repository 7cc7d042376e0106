"""Elements z_w of the 0-Hecke monoid H_n."""

# Utilities
import attr

# Models
from api.perms.models import Permutation


LEFT = 'left'
RIGHT = 'right'


@attr.s(frozen=True, slots=True, order=True, repr=False)
class HeckeElement:
    """The element z_w, represented by the permutation w."""

    w = attr.ib(validator=attr.validators.instance_of(Permutation))

    @property
    def n(self):
        return self.w.n

    @classmethod
    def identity(cls, n):
        return cls(Permutation.identity(n))

    @classmethod
    def generator(cls, i, n):
        """e_i = z_{s_i}."""
        return cls(Permutation.simple(i, n))

    @classmethod
    def zero(cls, n):
        return cls(Permutation.longest(n))

    @classmethod
    def parse(cls, text):
        return cls(Permutation.parse(text))

    def __mul__(self, other):
        from api.hecke.products import hecke_mul
        return hecke_mul(self, other)

    def reversed(self):
        """Image under the anti-involution induced by reversing words."""
        return HeckeElement(self.w.inverse())

    def __str__(self):
        return str(self.w)

    def __repr__(self):
        return 'z_{}'.format(self.w)
