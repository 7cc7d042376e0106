# Django
from django.test import SimpleTestCase

# Utilities
import itertools

# Models
from api.hecke.models import HeckeElement, OrderedSetPartition
from api.perms.models import Permutation

# Hecke
from api.hecke.foldings import act_word, chamber, chamber_permutation, chambers, face_type, fold
from api.hecke.products import hecke_word

# Exceptions
from api.utils.exceptions import InvalidInput


F = OrderedSetPartition.parse


class FoldingTestCase(SimpleTestCase):

    def test_fold_swaps(self):
        """phi_1({1,3},{2,4}) = ({2,3},{1,4})"""
        self.assertEqual(fold(1, F('({1,3},{2,4})')), F('({2,3},{1,4})'))

    def test_fold_fixes_same_block(self):
        """phi_i fixes F when i, i+1 share a block"""
        partition = F('({1,2},{3,4})')
        self.assertEqual(fold(1, partition), partition)
        self.assertEqual(fold(3, partition), partition)

    def test_fold_later_block(self):
        """phi_2({2},{1,3}) = ({3},{1,2})"""
        self.assertEqual(fold(2, F('({2},{1,3})')), F('({3},{1,2})'))
        self.assertEqual(fold(1, F('({2},{1,3})')), F('({2},{1,3})'))

    def test_serialization(self):
        """Blocks print sorted"""
        self.assertEqual(str(F('({3,1},{4,2})')), '({1,3},{2,4})')

    def test_invalid(self):
        """Partitions must cover 1..n with at least two blocks"""
        with self.assertRaises(InvalidInput):
            F('({1,2,3})')
        with self.assertRaises(InvalidInput):
            F('({1},{3})')

    def test_face_type(self):
        """Block boundaries"""
        self.assertEqual(face_type(F('({1,3},{2},{4})')), {2, 3})

    def test_chamber_bijection(self):
        """Chambers correspond to permutations"""
        self.assertEqual(len(chambers(4)), 24)
        for w in Permutation.all(4):
            self.assertEqual(chamber_permutation(chamber(w)), w)

    def test_folds_are_left_multiplication(self):
        """phi_i on chambers is left multiplication by e_i"""
        for w in Permutation.all(4):
            for i in range(1, 4):
                expected = hecke_word((i,), 4) * HeckeElement(w)
                self.assertEqual(chamber_permutation(fold(i, chamber(w))), expected.w)

    def test_action_is_regular(self):
        """Words act equally on chambers iff they define the same element"""
        n = 4
        all_chambers = chambers(n)
        words = [
            word
            for k in range(0, 7)
            for word in itertools.product(range(1, n), repeat=k)
        ]
        actions = {}
        elements = {}
        for word in words:
            action = tuple(act_word(word, c) for c in all_chambers)
            element = hecke_word(word, n)
            actions.setdefault(action, set()).add(element)
            elements.setdefault(element, set()).add(action)
        self.assertTrue(all(len(found) == 1 for found in actions.values()))
        self.assertTrue(all(len(found) == 1 for found in elements.values()))
        self.assertEqual(len(elements), 24)
