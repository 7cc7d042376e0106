# Django
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

# Utilities
import io
import json
import os
import re
import tempfile
from unittest import mock

# Verification
from api.verification.suites import SUITES

# Utils
from api import __version__


def run(*args):
    out, err = io.StringIO(), io.StringIO()
    call_command(*args, stdout=out, stderr=err)
    return out.getvalue()


def run_json(*args):
    return json.loads(run(*args, '--json'))


class ReportTestCase(SimpleTestCase):

    def test_envelope(self):
        """JSON reports carry the version, the config and the seed"""
        report = run_json('hecke', '--n', '3')
        self.assertEqual(report['version'], __version__)
        self.assertEqual(report['config']['command'], 'hecke')
        self.assertEqual(report['seed'], 0)
        self.assertTrue(report['passed'])

    def test_byte_identical(self):
        """Identical runs give identical reports"""
        self.assertEqual(run('dcm', 'count', '--n', '4', '--json'), run('dcm', 'count', '--n', '4', '--json'))

    def test_jobs_only_for_verify_all(self):
        """--jobs is refused elsewhere"""
        with self.assertRaises(CommandError):
            run('hecke', '--n', '3', '--jobs', '2')

    def test_negative_cap(self):
        """Caps must be positive"""
        with self.assertRaises(CommandError):
            run('hecke', '--n', '3', '--cap', '0')

    def test_cap_exceeded(self):
        """Hitting the cap is a command error"""
        with self.assertRaises(CommandError):
            run('hecke', '--n', '4', '--cap', '5')


class HeckeCommandTestCase(SimpleTestCase):

    def test_summary(self):
        """H_3 has 6 elements and 4 idempotents"""
        result = run_json('hecke', '--n', '3')['result']
        self.assertEqual(result['size'], 6)
        self.assertEqual(result['idempotents'], 4)
        self.assertTrue(result['j_trivial'])

    def test_mul(self):
        """z_213 z_132 = z_231"""
        self.assertEqual(run_json('hecke', '--mul', '213', '132')['result']['product'], '231')

    def test_ideal(self):
        """Four permutations lie below 231"""
        result = run_json('hecke', '--ideal', '231')['result']
        self.assertEqual(result['ideal'], ['123', '132', '213', '231'])

    def test_missing_degree(self):
        """The summary needs --n"""
        with self.assertRaises(CommandError):
            run('hecke')

    def test_fold(self):
        """phi_1 swaps 1 and 2 across blocks"""
        result = run_json('hecke', '--fold', '1', '({1,3},{2,4})')['result']
        self.assertEqual(result['image'], '({2,3},{1,4})')

    def test_invalid_operands(self):
        """Unparseable elements and partitions are command errors"""
        with self.assertRaises(CommandError):
            run('hecke', '--mul', '213', '113')
        with self.assertRaises(CommandError):
            run('hecke', '--fold', '1', '({1},{1})')


class DcmCommandTestCase(SimpleTestCase):

    def test_count(self):
        """|DC_4| = 23"""
        self.assertEqual(run_json('dcm', 'count', '--n', '4')['result']['size'], 23)

    def test_psi(self):
        """Psi(z_w0) is the full relation"""
        result = run_json('dcm', 'psi', '4321')['result']
        self.assertEqual(result['matrix']['rows'], ['1111'] * 4)
        self.assertEqual(result['permutation']['permutation'], '4321')
        self.assertEqual(result['permutation']['length'], 6)
        self.assertEqual(len(result['permutation']['reduced_word']), 6)

    def test_catalan_fibers(self):
        """The fiber of alpha = 333 is the interval [312, 321]"""
        report = run_json('dcm', 'catalan-fibers', '333')
        self.assertTrue(report['passed'])
        self.assertEqual(report['result']['alpha'], '333')
        self.assertEqual(report['result']['members'], ['312', '321'])
        self.assertEqual(report['result']['pi'], '312')
        self.assertEqual(report['result']['pi_prime'], '321')

    def test_catalan_fibers_needs_a_monotone_map(self):
        """Maps that are not order preserving are refused"""
        with self.assertRaises(CommandError):
            run('dcm', 'catalan-fibers', '132')
        with self.assertRaises(CommandError):
            run('dcm', 'catalan-fibers')

    def test_self_dual(self):
        """Nine self-dual elements in DC_4"""
        result = run_json('dcm', 'self-dual', '--n', '4')['result']
        self.assertEqual(result['self_dual'], 9)
        self.assertEqual(result['motzkin'], 9)

    def test_presentation(self):
        """The presentation of DC_3 is verified"""
        report = run_json('dcm', 'verify-presentation', '--n', '3')
        self.assertTrue(report['passed'])
        self.assertEqual(report['result']['presented_size'], 6)

    def test_fiber(self):
        """The fiber over the full relation of degree 3"""
        result = run_json('dcm', 'fiber', '111/111/111')['result']
        self.assertEqual(result['tau'], '321')

    def test_dot(self):
        """The Cayley graph of DC_3 has 6 nodes"""
        dot = run('dcm', 'count', '--n', '3', '--dot')
        self.assertTrue(dot.startswith('digraph "DC_3" {'))
        self.assertEqual(len(re.findall(r'^    n\d+ \[label=', dot, re.MULTILINE)), 6)


class DyckCommandTestCase(SimpleTestCase):

    def test_derivative(self):
        """delta(233) goes to delta(333)"""
        self.assertEqual(run_json('dyck', 'derivative', 'UUDUDD')['result']['derivative'], 'UUUDDD')

    def test_admissible(self):
        """The pair of 231 is admissible"""
        self.assertTrue(run_json('dyck', 'admissible', 'UUDUDD', 'UUUDDD')['result']['admissible'])

    def test_prec(self):
        """233 lies below 333"""
        self.assertTrue(run_json('dyck', 'prec', 'UUDUDD', 'UUUDDD')['result']['prec'])

    def test_arity(self):
        """Operand counts are checked"""
        with self.assertRaises(CommandError):
            run('dyck', 'admissible', 'UD')

    def test_invalid_path(self):
        """Bad paths are command errors"""
        with self.assertRaises(CommandError):
            run('dyck', 'derivative', 'DU')


class CoxeterCommandTestCase(SimpleTestCase):

    def test_summary(self):
        """A3 has order 24"""
        self.assertEqual(run_json('coxeter', '--type', 'A3')['result']['order'], 24)

    def test_catalan_quotient(self):
        """C(S_4) over the maximal parabolic of s_3 has 14 elements"""
        result = run_json('coxeter', 'quotient', '--type', 'A3', '--maximal', '3')['result']
        self.assertEqual(result['size'], 14)

    def test_needs_J(self):
        """Quotients need a parabolic"""
        with self.assertRaises(CommandError):
            run('coxeter', 'quotient', '--type', 'A3')

    def test_unknown_type(self):
        """Unknown types are refused"""
        with self.assertRaises(CommandError):
            run('coxeter', '--type', 'E8')

    def test_missing_files(self):
        """Unreadable generator files are command errors"""
        with tempfile.TemporaryDirectory() as directory:
            missing = os.path.join(directory, 'missing.txt')
            with self.assertRaises(CommandError) as raised:
                run('coxeter', '--gens', missing, '--matrix', missing)
        self.assertIn('missing.txt', str(raised.exception))

    def test_malformed_matrix(self):
        """Non-integer Coxeter matrix entries are command errors"""
        with tempfile.TemporaryDirectory() as directory:
            gens, matrix = os.path.join(directory, 'gens.txt'), os.path.join(directory, 'matrix.txt')
            with open(gens, 'w') as handle:
                handle.write('213\n132\n')
            with open(matrix, 'w') as handle:
                handle.write('1 three\nthree 1\n')
            with self.assertRaises(CommandError):
                run('coxeter', '--gens', gens, '--matrix', matrix)


class RepminCommandTestCase(SimpleTestCase):

    def test_report(self):
        """A2 needs dimension 4"""
        report = run_json('repmin', '--type', 'A2')
        self.assertTrue(report['passed'])
        self.assertEqual(report['result']['claimed'], 4)
        self.assertEqual(len(report['result']['socles']), 2)

    def test_double_catalan(self):
        """DC_3 acts effectively in dimension 4"""
        result = run_json('repmin', '--n', '3')['result']
        self.assertEqual(result['dim'], 4)
        self.assertTrue(result['effective'])

    def test_socle(self):
        """Socle vectors come as fraction strings"""
        result = run_json('repmin', 'socle', '--type', 'A2', '--maximal', '1')['result']
        self.assertEqual(result['dimension'], 1)
        self.assertTrue(all(isinstance(v, str) for v in result['components'][0]['basis'][0]))


class VerifyAllCommandTestCase(SimpleTestCase):

    def test_selected_suites(self):
        """The pass/fail matrix of the selected suites"""
        result = run_json('verify_all', '--n', '3', '--only', 'psi_two_routes', 'self_dual')['result']
        self.assertEqual(result['matrix'], {'psi_two_routes': True, 'self_dual': True})

    def test_failure_exit_status(self):
        """A failing suite exits with status 1 and its counterexample on stderr"""
        err = io.StringIO()
        with mock.patch.dict(SUITES, {'broken': ('always fails', lambda n_max, seed: (0, {}, {'n': 1}))}):
            with self.assertRaises(CommandError) as raised:
                call_command('verify_all', '--only', 'broken', stdout=io.StringIO(), stderr=err)
        self.assertEqual(raised.exception.returncode, 1)
        self.assertEqual(json.loads(err.getvalue())['counterexample'], {'n': 1})

    def test_unknown_suite(self):
        """Unknown suites are refused"""
        with self.assertRaises(CommandError):
            run('verify_all', '--only', 'nonsense')

    def test_cap_refused(self):
        """verify_all takes no --cap"""
        with self.assertRaises(CommandError):
            run('verify_all', '--n', '3', '--cap', '100')


class ExportCommandTestCase(SimpleTestCase):

    def test_json(self):
        """H_3 exported with its product table"""
        result = run_json('export', 'hecke', '--n', '3', '--product')['result']
        self.assertEqual(result['size'], 6)
        self.assertEqual(len(result['product']), 6)

    def test_trivial_monoid(self):
        """The trivial monoid is a single node"""
        dot = run('export', 'hecke', '--n', '1', '--dot')
        self.assertEqual(len(re.findall(r'^    n\d+ \[label=', dot, re.MULTILINE)), 1)

    def test_catalan(self):
        """C_4^+ has 14 elements"""
        self.assertEqual(run_json('export', 'catalan', '--n', '4')['result']['size'], 14)

    def test_needs_format(self):
        """Plain text is not an export format"""
        with self.assertRaises(CommandError):
            run('export', 'dcm', '--n', '3')
