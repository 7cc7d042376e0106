"""Finite Coxeter systems materialized as permutation groups."""

# Utilities
import attr


def compose_images(a, b):
    """(a * b)(x) = a(b(x)) on images indexed from 0."""
    return tuple(a[x] for x in b)


@attr.s(eq=False, repr=False)
class CoxeterSystem:
    """Element table of a finite Coxeter group W with generating set S.

    Elements are indexed in breadth-first order from the identity (index 0)
    along right multiplication by generators, so ``lengths`` is the graph
    distance and ``words[k]`` is a reduced word (generator indices) of
    element k. ``right[k][s]`` is the index of w_k s, ``left[k][s]`` the
    index of s w_k.
    """

    name = attr.ib()
    generators = attr.ib()
    coxeter_matrix = attr.ib()
    elements = attr.ib()
    lengths = attr.ib()
    words = attr.ib()
    right = attr.ib()
    left = attr.ib()
    index = attr.ib(init=False)

    def __attrs_post_init__(self):
        self.index = {element: k for k, element in enumerate(self.elements)}

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return '<CoxeterSystem {} of order {}>'.format(self.name, len(self))

    @property
    def rank(self):
        return len(self.generators)

    @property
    def generator_set(self):
        return frozenset(range(self.rank))

    @property
    def longest(self):
        return max(range(len(self)), key=lambda k: self.lengths[k])

    def generator_index(self, s):
        """Element index of the generator s."""
        return self.right[0][s]

    def multiply(self, a, b):
        current = a
        for s in self.words[b]:
            current = self.right[current][s]
        return current

    def inverse(self, a):
        current = 0
        for s in reversed(self.words[a]):
            current = self.right[current][s]
        return current

    def right_descents(self, k):
        return frozenset(s for s in range(self.rank) if self.lengths[self.right[k][s]] < self.lengths[k])

    def left_descents(self, k):
        return frozenset(s for s in range(self.rank) if self.lengths[self.left[k][s]] < self.lengths[k])

    def longest_conjugation(self):
        """The permutation s -> w0 s w0 of S."""
        w0 = self.longest
        result = []
        for s in range(self.rank):
            conjugate = self.multiply(self.multiply(w0, self.generator_index(s)), w0)
            result.append(next(t for t in range(self.rank) if self.generator_index(t) == conjugate))
        return tuple(result)

    def element_label(self, k):
        """Reduced word of element k, generators numbered from 1."""
        if not self.words[k]:
            return 'e'
        return '.'.join(str(s + 1) for s in self.words[k])
