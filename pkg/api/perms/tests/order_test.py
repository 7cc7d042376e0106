# Django
from django.test import SimpleTestCase

# Hypothesis
from hypothesis import given

# Models
from api.perms.models import Direction, Permutation, invert

# Perms
from api.perms.bruhat import bruhat_leq, bruhat_leq_subword
from api.perms.patterns import contains_pattern
from api.perms.statistics import alpha, beta, catalan_generators, monotone_maps

# Utils
from api.perms.tests.strategies import permutation_pairs, permutations


P = Permutation.parse
CATALAN = [1, 2, 5, 14, 42, 132]


class BruhatTestCase(SimpleTestCase):

    def test_identity_is_bottom(self):
        """Identity should lie below everything"""
        for w in Permutation.all(4):
            self.assertTrue(bruhat_leq(Permutation.identity(4), w))

    def test_231_below_321(self):
        """231 <= 321"""
        self.assertTrue(bruhat_leq(P('231'), P('321')))

    def test_incomparable(self):
        """231 and 312 are incomparable"""
        self.assertFalse(bruhat_leq(P('231'), P('312')))
        self.assertFalse(bruhat_leq(P('312'), P('231')))

    def test_agrees_with_subword_property(self):
        """Tableau criterion should agree with the subword property in S_4"""
        elements = list(Permutation.all(4))
        for u in elements:
            for w in elements:
                self.assertEqual(bruhat_leq(u, w), bruhat_leq_subword(u, w), (u, w))

    @given(permutation_pairs(max_n=5))
    def test_subword_property(self, pair):
        """Tableau criterion should agree with the subword property"""
        u, w = pair
        self.assertEqual(bruhat_leq(u, w), bruhat_leq_subword(u, w))


class PatternTestCase(SimpleTestCase):

    def test_contains_itself(self):
        """A permutation contains itself"""
        self.assertTrue(contains_pattern(P('2143'), P('2143')))

    def test_3412_avoids_321(self):
        """3412 has no decreasing subsequence of length 3"""
        self.assertFalse(contains_pattern(P('3412'), P('321')))

    def test_4231_and_4321(self):
        """4231 and 4321 do not contain each other"""
        self.assertFalse(contains_pattern(P('4231'), P('4321')))
        self.assertFalse(contains_pattern(P('4321'), P('4231')))

    def test_avoider_counts(self):
        """4321-avoiding counts up to degree 6"""
        counts = [
            sum(1 for w in Permutation.all(n) if not contains_pattern(w, P('4321')))
            for n in range(1, 7)
        ]
        self.assertEqual(counts, [1, 2, 6, 23, 103, 513])

    @given(permutations(max_n=6))
    def test_invariant_under_inverse(self, w):
        """Containment should commute with inversion"""
        for p in (P('321'), P('4321')):
            self.assertEqual(contains_pattern(w, p), contains_pattern(invert(w), invert(p)))


class StatisticsTestCase(SimpleTestCase):

    def test_identity(self):
        """alpha and beta of the identity are identities"""
        self.assertEqual(alpha(Permutation.identity(4)).values, (1, 2, 3, 4))
        self.assertEqual(beta(Permutation.identity(4)).values, (1, 2, 3, 4))

    def test_3412(self):
        """alpha(3412) = 3444, beta(3412) = 1112"""
        self.assertEqual(str(alpha(P('3412'))), '3444')
        self.assertEqual(str(beta(P('3412'))), '1112')

    def test_231(self):
        """alpha(231) = 233, beta(231) = 111"""
        self.assertEqual(str(alpha(P('231'))), '233')
        self.assertEqual(str(beta(P('231'))), '111')

    @given(permutations())
    def test_bounds(self, w):
        """alpha(w)(i) >= i >= beta(w)(i)"""
        a, b = alpha(w), beta(w)
        for i in range(1, w.n + 1):
            self.assertGreaterEqual(a(i), i)
            self.assertLessEqual(b(i), i)

    def test_catalan_counts(self):
        """Both Catalan monoids have Catalan many elements"""
        for n, count in enumerate(CATALAN, 1):
            self.assertEqual(len(monotone_maps(n, Direction.INCREASING)), count)
            self.assertEqual(len(monotone_maps(n, Direction.DECREASING)), count)

    def test_generators(self):
        """Generators of C_3^+ and C_3^-"""
        self.assertEqual([str(g) for g in catalan_generators(3)], ['223', '133'])
        self.assertEqual([str(g) for g in catalan_generators(3, Direction.DECREASING)], ['113', '122'])
