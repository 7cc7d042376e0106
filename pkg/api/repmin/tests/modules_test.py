# Django
from django.test import SimpleTestCase

# Coxeter
from api.coxeter.builders import dihedral, type_a, type_b
from api.coxeter.tests.systems_test import element_of

# Repmin
from api.repmin.effective import dc_min_dim_check, effective_check, min_dim_report, prime_sum
from api.repmin.eigen import eigen_check, eigen_structure
from api.repmin.modules import build_P, direct_sum, relations_check, split_P
from api.repmin.serializers import MinDimReportSerializer, SocleReportSerializer
from api.repmin.socle import simple_socle, socle, socle_dimensions

# Exceptions
from api.utils.exceptions import InvalidInput


SOCLE_SYSTEMS = [type_a(2), type_a(3), type_a(4), type_b(2), type_b(3)] + [dihedral(m) for m in range(3, 7)]


def elements(module):
    return [label[0][0] for label in module.basis]


class ProjectiveTestCase(SimpleTestCase):

    def test_a2_basis(self):
        """P_(s1) of A_2 is spanned by z_132, z_231, z_321"""
        a2 = type_a(2)
        module = build_P(a2, 0)
        self.assertEqual(module.dimension, 3)
        self.assertEqual(set(elements(module)), {element_of(a2, w) for w in ('132', '231', '321')})

    def test_dimension_is_index(self):
        """dim P_(s) = [W : W_(s)]"""
        a3 = type_a(3)
        for s in range(3):
            self.assertEqual(build_P(a3, s).dimension, 4 if s != 1 else 6)

    def test_relations(self):
        """Generator matrices satisfy the 0-Hecke relations"""
        for system in [type_a(2), type_a(3), type_b(2), dihedral(5)]:
            for s in range(system.rank):
                module = build_P(system, s)
                self.assertTrue(relations_check(module))
                self.assertTrue(relations_check(split_P(module)[0]))

    def test_split_dimensions(self):
        """P'_(s) has codimension one"""
        a3 = type_a(3)
        for s in (0, 2):
            prime, trivial = split_P(build_P(a3, s))
            self.assertEqual(prime.dimension, 3)
            self.assertEqual(trivial.dimension, 1)

    def test_split_needs_element_basis(self):
        """Only modules spanned by elements can be split"""
        prime, _ = split_P(build_P(type_a(2), 0))
        with self.assertRaises(InvalidInput):
            split_P(prime)

    def test_direct_sum(self):
        """Dimensions add up and relations survive"""
        a2 = type_a(2)
        module = direct_sum([build_P(a2, 0), build_P(a2, 1)])
        self.assertEqual(module.dimension, 6)
        self.assertTrue(relations_check(module))


class EigenspaceTestCase(SimpleTestCase):

    def test_a2_example(self):
        """e_{s2} on P_(s1) fixes z_132 and z_321"""
        a2 = type_a(2)
        module = build_P(a2, 0)
        structure = eigen_structure(module, 1)
        positions = elements(module)
        fixed = {positions[v.index(1)] for v in structure['fixed_basis']}
        self.assertEqual(fixed, {element_of(a2, '132'), element_of(a2, '321')})
        self.assertEqual(len(structure['kernel_basis']), 1)

    def test_decomposition(self):
        """Fixed and kernel bases match elimination for every generator"""
        for system in [type_a(3), type_b(3), dihedral(6)]:
            for s in range(system.rank):
                module = build_P(system, s)
                for t in range(system.rank):
                    self.assertTrue(eigen_check(module, t), (system.name, s, t))


class SocleTestCase(SimpleTestCase):

    def test_a2_prime(self):
        """soc P'_(s1) is spanned by z_231 - z_321, of type {s1}"""
        a2 = type_a(2)
        prime, _ = split_P(build_P(a2, 0))
        report = socle(prime)
        self.assertTrue(report.is_simple())
        self.assertEqual(report.types(), [frozenset({0})])
        expected = prime.basis_vector(elements(prime).index(element_of(a2, '231')))
        self.assertEqual(list(report.components[0].basis), [expected])

    def test_trivial_summand(self):
        """z_w0 spans a copy of theta_S"""
        a2 = type_a(2)
        _, trivial = split_P(build_P(a2, 1))
        self.assertEqual(socle_dimensions(trivial), {frozenset({0, 1}): 1})

    def test_simple_socles(self):
        """Every P'_(s) has the simple socle k(z_{w0 s} - z_w0)"""
        for system in SOCLE_SYSTEMS:
            for s in range(system.rank):
                result = simple_socle(system, s)
                self.assertEqual(result['dimension'], 1)
                self.assertTrue(result['holds'], (system.name, s))

    def test_characteristic_free(self):
        """Socle dimensions do not depend on the field"""
        a3 = type_a(3)
        for s in range(3):
            prime, _ = split_P(build_P(a3, s))
            rational = socle_dimensions(prime)
            for p in (2, 3):
                prime_p, _ = split_P(build_P(a3, s, modulus=p))
                self.assertEqual(socle_dimensions(prime_p), rational)

    def test_serializer(self):
        """Socle vectors are written as fraction strings"""
        prime, _ = split_P(build_P(type_a(2), 0))
        data = SocleReportSerializer(socle(prime)).data
        self.assertEqual(data['dimension'], 1)
        self.assertEqual(data['components'][0]['J'], [1])
        self.assertEqual(sorted(data['components'][0]['basis'][0]), ['0', '1'])


class EffectiveTestCase(SimpleTestCase):

    def test_a2(self):
        """The sum of the P'_(s) of A_2 is effective of dimension 4"""
        a2 = type_a(2)
        module = prime_sum(a2)
        self.assertEqual(module.dimension, 4)
        self.assertTrue(effective_check(a2, module))

    def test_trivial_not_effective(self):
        """The trivial module only sees one element"""
        a2 = type_a(2)
        _, trivial = split_P(build_P(a2, 0))
        self.assertFalse(effective_check(a2, trivial))

    def test_type_a_dimensions(self):
        """2^n - n - 1 for A_{n-1}"""
        for n in (3, 4, 5):
            report = min_dim_report(type_a(n - 1))
            self.assertEqual(report['claimed'], 2 ** n - n - 1)
            self.assertEqual(report['constructed_dim'], report['claimed'])
            self.assertTrue(report['effective'])
            self.assertTrue(report['socle_verified'])

    def test_other_types(self):
        """v(W) - r(W) for B_2, B_3 and the dihedral groups"""
        self.assertEqual(min_dim_report(dihedral(4))['claimed'], 6)
        self.assertEqual(min_dim_report(type_b(3))['claimed'], 23)
        for system in [type_b(2), type_b(3)] + [dihedral(m) for m in range(2, 7)]:
            report = min_dim_report(system)
            self.assertEqual(report['constructed_dim'], report['claimed'], system.name)
            self.assertTrue(report['effective'], system.name)
            self.assertTrue(report['relations'], system.name)

    def test_double_catalan(self):
        """P'_(s1) + P'_(s_{n-1}) is an effective DC_n-module of dimension 2n - 2"""
        sizes = {2: 2, 3: 6, 4: 23, 5: 103}
        for n, size in sizes.items():
            report = dc_min_dim_check(n)
            self.assertEqual(report['dim'], 2 * n - 2)
            self.assertEqual(report['dc_size'], size)
            self.assertTrue(report['factors'])
            self.assertTrue(report['effective'])

    def test_double_catalan_degree(self):
        """Degree one is refused"""
        with self.assertRaises(InvalidInput):
            dc_min_dim_check(1)

    def test_serializer(self):
        """Reports serialize flat"""
        data = MinDimReportSerializer(min_dim_report(type_a(2))).data
        self.assertEqual(data['claimed'], 4)
        self.assertEqual(data['system'], 'A2')
