# Django
from django.test import SimpleTestCase

# Hypothesis
from hypothesis import given
from hypothesis import strategies as st

# Models
from api.boolmat.models import BoolMatrix, ConvexRelation
from api.perms.models import Direction, Permutation, compose

# Boolmat
from api.boolmat.convex import is_convex, max_map, min_map, theta, theta_inverse, theta_leq
from api.boolmat.relations import bool_product, permutation_matrix, relation_sum, transpose

# Perms
from api.perms.statistics import monotone_maps

# Exceptions
from api.utils.exceptions import DegreeMismatch, InvalidInput


FIGURE = BoolMatrix.from_strings(['1110', '1110', '0110', '0011'])


def epsilon(i, n):
    return relation_sum(BoolMatrix.identity(n), permutation_matrix(Permutation.simple(i, n)))


def convex_relations(n):
    return [
        theta_inverse((a, b)).matrix
        for a in monotone_maps(n, Direction.INCREASING)
        for b in monotone_maps(n, Direction.DECREASING)
    ]


def matrices(n):
    return st.lists(st.integers(min_value=0, max_value=(1 << n) - 1), min_size=n, max_size=n).map(BoolMatrix)


def convex_pairs(n):
    elements = convex_relations(n)
    return st.tuples(st.sampled_from(elements), st.sampled_from(elements))


class BoolMatrixTestCase(SimpleTestCase):

    def test_epsilon_product(self):
        """e1 e2 in B_3 should have columns {1,2}, {1,2,3}, {1,2,3}"""
        product = bool_product(epsilon(1, 3), epsilon(2, 3))
        self.assertEqual(product.columns(), [{1, 2}, {1, 2, 3}, {1, 2, 3}])

    def test_identity_neutral(self):
        """I * M = M"""
        self.assertEqual(bool_product(BoolMatrix.identity(4), FIGURE), FIGURE)

    def test_epsilon_idempotent_and_symmetric(self):
        """Generators should be idempotent and symmetric"""
        for i in range(1, 4):
            e = epsilon(i, 4)
            self.assertEqual(e * e, e)
            self.assertEqual(transpose(e), e)

    def test_permutation_matrix_homomorphism(self):
        """Phi(u) Phi(w) = Phi(u * w)"""
        for u in Permutation.all(3):
            for w in Permutation.all(3):
                self.assertEqual(permutation_matrix(u) * permutation_matrix(w), permutation_matrix(compose(u, w)))

    def test_degree_mismatch(self):
        """Products of different degrees should fail"""
        with self.assertRaises(DegreeMismatch):
            BoolMatrix.identity(2) * BoolMatrix.identity(3)

    def test_text_format(self):
        """Rows should print as 0/1 lines"""
        self.assertEqual(str(FIGURE), '1110\n1110\n0110\n0011')
        with self.assertRaises(InvalidInput):
            BoolMatrix.from_strings(['10', '1'])

    @given(matrices(4), matrices(4))
    def test_transpose_anti_automorphism(self, a, b):
        """(ab)^t = b^t a^t"""
        self.assertEqual(transpose(a * b), transpose(b) * transpose(a))

    @given(matrices(3), matrices(3), matrices(3))
    def test_associative(self, a, b, c):
        """Boolean product should be associative"""
        self.assertEqual((a * b) * c, a * (b * c))


class ConvexTestCase(SimpleTestCase):

    def test_identity_convex(self):
        """Identity is convex"""
        self.assertTrue(is_convex(BoolMatrix.identity(5)))

    def test_figure_convex(self):
        """The 4 x 4 example relation is convex"""
        self.assertTrue(is_convex(FIGURE))

    def test_gap_not_convex(self):
        """Column {1, 3} breaks the interval condition"""
        matrix = BoolMatrix.from_strings(['101', '010', '001'])
        self.assertFalse(is_convex(matrix))
        with self.assertRaises(InvalidInput):
            ConvexRelation(matrix)
        with self.assertRaises(InvalidInput):
            max_map(matrix)

    def test_figure_maps(self):
        """max = 2344, min = 1114"""
        self.assertEqual(str(max_map(FIGURE)), '2344')
        self.assertEqual(str(min_map(FIGURE)), '1114')

    def test_identity_maps(self):
        """theta(I) = (id, id)"""
        alpha, beta = theta(BoolMatrix.identity(3))
        self.assertEqual(alpha.values, (1, 2, 3))
        self.assertEqual(beta.values, (1, 2, 3))

    def test_full_maps(self):
        """All-ones matrix maps to constants"""
        alpha, beta = theta(BoolMatrix.full(4))
        self.assertEqual(alpha.values, (4, 4, 4, 4))
        self.assertEqual(beta.values, (1, 1, 1, 1))

    def test_theta_inverse(self):
        """theta^-1(233, 111) has columns {1,2}, {1,2,3}, {1,2,3}"""
        pair = (monotone_maps(3)[-2], monotone_maps(3, Direction.DECREASING)[0])
        self.assertEqual((str(pair[0]), str(pair[1])), ('233', '111'))
        self.assertEqual(theta_inverse(pair).matrix.columns(), [{1, 2}, {1, 2, 3}, {1, 2, 3}])

    def test_round_trip(self):
        """theta^-1(theta(xi)) = xi"""
        self.assertEqual(theta_inverse(theta(FIGURE)).matrix, FIGURE)

    def test_convex_count(self):
        """There are Catalan squared convex relations, all distinct"""
        self.assertEqual(len(set(convex_relations(4))), 14 * 14)

    def test_order_preserved(self):
        """Inclusion should imply the Catalan order"""
        elements = convex_relations(3)
        for a in elements:
            for b in elements:
                if a.issubset(b):
                    self.assertTrue(theta_leq(a, b))

    def test_homomorphism_exhaustive(self):
        """max and min should be multiplicative in degree 3"""
        elements = convex_relations(3)
        for a in elements:
            for b in elements:
                self.assertEqual(max_map(a * b), max_map(a) * max_map(b))
                self.assertEqual(min_map(a * b), min_map(a) * min_map(b))

    @given(convex_pairs(6))
    def test_closed_and_homomorphism(self, pair):
        """Products of convex relations are convex, and theta is multiplicative"""
        a, b = pair
        product = a * b
        self.assertTrue(is_convex(product))
        self.assertEqual(max_map(product), max_map(a) * max_map(b))
        self.assertEqual(min_map(product), min_map(a) * min_map(b))
