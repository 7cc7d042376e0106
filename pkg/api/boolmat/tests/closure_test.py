# Django
from django.test import SimpleTestCase

# Utilities
import json

# Models
from api.boolmat.models import BoolMatrix
from api.perms.models import Direction, MonotoneMap

# Boolmat
from api.boolmat.closure import generate_monoid
from api.boolmat.export import export_cayley, table_to_dict, table_to_dot, table_to_json
from api.boolmat.tests.matrices_test import epsilon

# Hecke
from api.hecke.monoid import hecke_monoid

# Perms
from api.perms.statistics import catalan_generators

# Exceptions
from api.utils.exceptions import CapExceeded, InvalidInput

# Utils
from api.utils.renderers import render_json


def multiply(a, b):
    return a * b


class ClosureTestCase(SimpleTestCase):

    def setUp(self):
        generators = [epsilon(i, 4) for i in range(1, 4)]
        self.table = generate_monoid(generators, multiply, BoolMatrix.identity(4))

    def test_epsilon_closure(self):
        """e1, e2, e3 generate 23 matrices in B_4"""
        self.assertEqual(len(self.table), 23)

    def test_identity_only(self):
        """The identity alone generates the trivial monoid"""
        table = generate_monoid([BoolMatrix.identity(3)], multiply, BoolMatrix.identity(3))
        self.assertEqual(len(table), 1)

    def test_catalan_monoid(self):
        """Generators of C_4^+ give 14 maps"""
        table = generate_monoid(catalan_generators(4), multiply, MonotoneMap.identity(4, Direction.INCREASING))
        self.assertEqual(len(table), 14)

    def test_cap(self):
        """Closure should stop at the cap"""
        generators = [epsilon(i, 4) for i in range(1, 4)]
        with self.assertRaises(CapExceeded):
            generate_monoid(generators, multiply, BoolMatrix.identity(4), cap=10)

    def test_words_are_shortest(self):
        """Word lengths never decrease along the numbering"""
        lengths = [len(word) for word in self.table.words]
        self.assertEqual(lengths, sorted(lengths))
        self.assertEqual(self.table.words[0], ())

    def test_product_table(self):
        """Product table should agree with the direct product"""
        table = self.table.product_table()
        elements = self.table.elements
        for a in range(len(elements)):
            for b in range(len(elements)):
                self.assertEqual(elements[table[a][b]], elements[a] * elements[b])

    def test_idempotents(self):
        """Idempotents of the 23 element monoid"""
        for k in self.table.idempotents():
            element = self.table.elements[k]
            self.assertEqual(element * element, element)
        # one idempotent per subset of generators
        self.assertEqual(len(self.table.idempotents()), 8)

    def test_left_cayley(self):
        """Left edges multiply by a generator on the left"""
        left = self.table.left_cayley()
        for k, edges in enumerate(left):
            for g, target in enumerate(edges):
                generator = self.table.elements[self.table.generators[g]]
                self.assertEqual(self.table.elements[target], generator * self.table.elements[k])

    def test_exports(self):
        """JSON and DOT exports"""
        data = json.loads(table_to_json(self.table, generator_names=['e1', 'e2', 'e3']))
        self.assertEqual(data['size'], 23)
        self.assertEqual(data['elements'][0]['label'], '1000010000100001')
        dot = table_to_dot(self.table, generator_names=['e1', 'e2', 'e3'])
        self.assertTrue(dot.startswith('digraph "monoid" {'))
        self.assertIn('n0 -> n1 [label="e1"];', dot)
        self.assertIn('product', table_to_dict(self.table, include_product=True))

    def test_export_cayley(self):
        """The Cayley export in both formats"""
        dot = export_cayley(self.table, name='DC_4')
        self.assertEqual(dot, self.table.to_dot(name='DC_4'))
        self.assertEqual(dot.count('[label=') - dot.count('->'), 23)
        trivial = generate_monoid([BoolMatrix.identity(2)], multiply, BoolMatrix.identity(2))
        self.assertEqual(export_cayley(trivial).count('->'), len(trivial.generators))
        self.assertEqual(json.loads(export_cayley(self.table, 'json', name='DC_4'))['size'], 23)
        self.assertEqual(self.table.to_json(), table_to_json(self.table))
        with self.assertRaises(InvalidInput):
            export_cayley(self.table, 'png')

    def test_dot_keeps_loops(self):
        """Every element has one outgoing edge per generator, fixed points included"""
        table = hecke_monoid(3)
        dot = table_to_dot(table)
        self.assertEqual(dot.count('->'), len(table.elements) * len(table.generators))
        self.assertEqual(dot.count('->'), 6 * 2)
        self.assertIn('n0 -> n1 [label="g1"];', dot)
        self.assertIn('n1 -> n1 [label="g1"];', dot)

    def test_json_is_indented(self):
        """JSON exports go through the report renderer"""
        text = table_to_json(self.table)
        self.assertTrue(text.startswith('{\n  "size": 23'))
        self.assertEqual(text, render_json(table_to_dict(self.table)))
