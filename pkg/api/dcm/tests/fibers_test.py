# Django
from django.test import SimpleTestCase

# Models
from api.boolmat.models import BoolMatrix
from api.perms.models import Direction, MonotoneMap, Permutation

# Dcm
from api.dcm.fibers import (
    analyse_members,
    catalan_fiber_analysis,
    catalan_pi,
    fiber,
    fiber_analysis,
    fibers,
    first_multi_maximal_fiber,
)
from api.dcm.generators import epsilon, psi
from api.dcm.serializers import FiberReportSerializer

# Perms
from api.perms.bruhat import bruhat_leq
from api.perms.patterns import avoids, contains_pattern
from api.perms.statistics import monotone_maps

# Exceptions
from api.utils.exceptions import InternalInconsistency, InvalidInput


P = Permutation.parse


class FiberTestCase(SimpleTestCase):

    def test_identity(self):
        """Fiber over I is {id}"""
        self.assertEqual(fiber(BoolMatrix.identity(4)), {Permutation.identity(4)})

    def test_all_ones(self):
        """Fiber over the all-ones matrix of degree 4"""
        self.assertEqual(fiber(BoolMatrix.full(4)), {P('4231'), P('4321')})
        report = fiber_analysis(BoolMatrix.full(4))
        self.assertEqual(report.tau, P('4231'))
        self.assertEqual(report.maximal, {P('4321')})
        self.assertTrue(report.convex)

    def test_generator(self):
        """Fiber over epsilon_1 in degree 3 is {213}"""
        self.assertEqual(fiber(epsilon(1, 3)), {P('213')})
        report = fiber_analysis(epsilon(2, 4))
        self.assertEqual(report.tau, P('1324'))
        self.assertEqual(report.maximal, {P('1324')})

    def test_not_an_element(self):
        """Matrices outside DC_n have empty fibers"""
        with self.assertRaises(InvalidInput):
            fiber(BoolMatrix.from_strings(['110', '010', '011']))

    def test_partition(self):
        """Fibers partition S_5 into 103 classes"""
        found = fibers(5)
        self.assertEqual(len(found), 103)
        self.assertEqual(sum(len(members) for members in found.values()), 120)

    def test_structure(self):
        """Every fiber of degree 5 has a unique 4321-avoiding minimum and is convex"""
        for members in fibers(5).values():
            report = fiber_analysis(psi(members[0]))
            self.assertFalse(contains_pattern(report.tau, P('4321')))
            self.assertTrue(report.convex)
            for top in report.maximal:
                self.assertFalse(contains_pattern(top, P('4231')))
            for w in members:
                self.assertTrue(bruhat_leq(report.tau, w))

    def test_non_convex_members(self):
        """A member set with a gap between its minimum and maximum is rejected"""
        with self.assertRaises(InternalInconsistency) as context:
            analyse_members({P('42315'), P('54321')})
        self.assertEqual(context.exception.witness['tau'], '42315')
        self.assertEqual(context.exception.witness['members'], ['42315', '54321'])

    def test_self_dual_minima(self):
        """Minima of the self-dual fibers are the 4321-avoiding involutions"""
        for n in range(1, 7):
            minima = {
                analyse_members(members).tau
                for matrix, members in fibers(n).items()
                if matrix.transpose() == matrix
            }
            involutions = {w for w in Permutation.all(n) if w.inverse() == w and avoids(w, P('4321'))}
            self.assertEqual(minima, involutions)

    def test_multi_maximal_search(self):
        """No degree up to 4 has a fiber with several maximal members"""
        self.assertIsNone(first_multi_maximal_fiber(4))
        found = first_multi_maximal_fiber(5)
        if found is not None:
            n, matrix, report = found
            self.assertEqual(n, 5)
            self.assertGreater(len(report.maximal), 1)

    def test_serializer(self):
        """Fiber reports serialize as sorted strings"""
        data = FiberReportSerializer(fiber_analysis(BoolMatrix.full(4))).data
        self.assertEqual(data['members'], ['4231', '4321'])
        self.assertEqual(data['tau'], '4231')
        self.assertEqual(data['maximal'], ['4321'])


class CatalanFiberTestCase(SimpleTestCase):

    def test_identity(self):
        """alpha = id gives pi = pi' = id"""
        report = catalan_fiber_analysis(MonotoneMap.identity(3))
        self.assertEqual(report.pi, Permutation.identity(3))
        self.assertEqual(report.pi_prime, Permutation.identity(3))

    def test_constant(self):
        """alpha = 333 gives the interval [312, 321]"""
        report = catalan_fiber_analysis(MonotoneMap(Direction.INCREASING, (3, 3, 3)))
        self.assertEqual(report.pi, P('312'))
        self.assertEqual(report.pi_prime, P('321'))
        self.assertEqual(report.members, {P('312'), P('321')})
        self.assertTrue(report.interval)

    def test_singleton(self):
        """alpha = 233 has the single member 231"""
        a = MonotoneMap(Direction.INCREASING, (2, 3, 3))
        self.assertEqual(catalan_pi(a), P('231'))
        report = catalan_fiber_analysis(a)
        self.assertEqual(report.members, {P('231')})
        self.assertEqual(report.pi_prime, P('231'))

    def test_all_intervals(self):
        """Every Catalan fiber of degree 5 is a Bruhat interval"""
        maps = monotone_maps(5)
        self.assertEqual(len(maps), 42)
        total = 0
        for a in maps:
            report = catalan_fiber_analysis(a)
            self.assertTrue(report.interval)
            total += len(report.members)
        self.assertEqual(total, 120)
