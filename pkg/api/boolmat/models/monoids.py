"""Finite monoid tables."""

# Utilities
import attr

# Boolmat
from api.boolmat.export import table_to_dot, table_to_json


@attr.s(eq=False, repr=False)
class MonoidTable:
    """Finite monoid given by its elements and right Cayley graph.

    Element 0 is the identity. Elements are numbered by increasing length of
    their shortest word, then by the order in which the breadth-first closure
    reached them, and ``words[k]`` is a shortest word (as generator
    positions) of element k. The full product table is built on demand.
    """

    elements = attr.ib()
    generators = attr.ib()
    right = attr.ib()
    words = attr.ib()
    multiply = attr.ib()
    index = attr.ib(init=False)
    _table = attr.ib(init=False, default=None)
    _left = attr.ib(init=False, default=None)

    def __attrs_post_init__(self):
        self.index = {element: k for k, element in enumerate(self.elements)}

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, element):
        return element in self.index

    def __repr__(self):
        return '<MonoidTable of {} elements>'.format(len(self))

    @property
    def identity(self):
        return self.elements[0]

    def product(self, a, b):
        """Index of elements[a] * elements[b], read off the right Cayley graph."""
        if self._table is not None:
            return self._table[a][b]
        current = a
        for g in self.words[b]:
            current = self.right[current][g]
        return current

    def product_table(self):
        if self._table is None:
            size = len(self)
            table = [[0] * size for _ in range(size)]
            # words are prefix closed, so each product extends a shorter one
            prefixes = [self.index_of_word(word[:-1]) for word in self.words]
            for a in range(size):
                row = table[a]
                row[0] = a
                for b in range(1, size):
                    row[b] = self.right[row[prefixes[b]]][self.words[b][-1]]
            self._table = table
        return self._table

    def index_of_word(self, word):
        current = 0
        for g in word:
            current = self.right[current][g]
        return current

    def left_cayley(self):
        """left[k][g] = index of generator g times element k."""
        if self._left is None:
            self._left = [
                tuple(self.product(gen, k) for gen in self.generators)
                for k in range(len(self))
            ]
        return self._left

    def idempotents(self):
        return [k for k in range(len(self)) if self.product(k, k) == k]

    def two_sided_ideal(self, k):
        """Indices of all a * x * b with x = elements[k]."""
        table = self.product_table()
        right_ideal = {table[k][b] for b in range(len(self))}
        return frozenset(table[a][r] for a in range(len(self)) for r in right_ideal)

    def to_json(self, **kwargs):
        return table_to_json(self, **kwargs)

    def to_dot(self, **kwargs):
        return table_to_dot(self, **kwargs)
