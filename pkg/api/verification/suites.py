"""Exhaustive and randomized verification suites.

Every suite scans its cases in a fixed order and stops at the first failing
case, which becomes the counterexample of its result.
"""

# Utilities
import logging
import math
import random

# Models
from api.dyck.models import DyckPath, PathPair
from api.hecke.models import HeckeElement
from api.perms.models import Direction, MonotoneMap, Permutation
from api.verification.models import SuiteResult

# Boolmat
from api.boolmat.closure import generate_monoid
from api.boolmat.convex import is_convex, theta, theta_inverse, theta_leq

# Coxeter
from api.coxeter.builders import dihedral, type_a, type_b
from api.coxeter.parabolics import coset_max_rep, cosets, is_max_rep
from api.coxeter.complex import coxeter_idempotents

# Dcm
from api.dcm.fibers import analyse_members, catalan_fiber_analysis, fibers, first_multi_maximal_fiber
from api.dcm.generators import psi
from api.dcm.monoid import dc_idempotents, dc_monoid, is_block_of_ones, motzkin_numbers, self_dual_count
from api.dcm.presentation import verify_presentation

# Dyck
from api.dyck.admissible import admissible_pairs, is_admissible
from api.dyck.bijection import delta, dyck_paths
from api.dyck.kreweras import is_componentwise, kreweras_derivative
from api.dyck.orders import h_order_prec, prec_prime

# Hecke
from api.hecke.ideals import bruhat_ideal, ideal_product
from api.hecke.monoid import hecke_monoid
from api.hecke.products import hecke_mul

# Perms
from api.perms.patterns import avoids
from api.perms.statistics import catalan_generators, monotone_maps

# Repmin
from api.repmin.effective import dc_min_dim_check, min_dim_report
from api.repmin.eigen import eigen_check
from api.repmin.modules import build_P
from api.repmin.socle import simple_socle

# Exceptions
from api.utils.exceptions import CatkitError, InternalInconsistency

# Utils
from api.utils.config import random_samples


logger = logging.getLogger(__name__)

SUITES = {}

P4321 = Permutation.parse('4321')


def suite(key, statement):
    """Register ``function(n_max, seed) -> (checked, details, counterexample)``."""
    def register(function):
        SUITES[key] = (statement, function)
        return function
    return register


def run_suite(key, n_max, seed=0):
    statement, function = SUITES[key]
    try:
        checked, details, counterexample = function(n_max, seed)
    except InternalInconsistency as error:
        checked, details = 0, {}
        counterexample = {'error': str(error), 'witness': error.witness}
    except CatkitError as error:
        checked, details = 0, {}
        counterexample = {'error': str(error)}
    passed = counterexample is None
    if passed:
        logger.info('%s: %d cases passed', key, checked)
    else:
        logger.warning('%s failed: %s', key, counterexample)
    return SuiteResult(
        key=key,
        statement=statement,
        passed=passed,
        checked=checked,
        details=details,
        counterexample=counterexample,
    )


def _coxeter_systems(max_rank_a):
    systems = [type_a(k) for k in range(1, max_rank_a + 1)]
    return systems + [type_b(2), type_b(3)] + [dihedral(m) for m in range(3, 7)]


def _labels(J):
    return sorted(s + 1 for s in J)


@suite('subset_realization', 'z_w -> Bruhat ideal below w is an injective homomorphism of H_n')
def subset_realization(n_max, seed):
    checked = 0
    for n in range(1, min(n_max, 5) + 1):
        elements = list(Permutation.all(n))
        ideals = {w: bruhat_ideal(w) for w in elements}
        if len(set(ideals.values())) != len(elements):
            return checked, {}, {'n': n, 'reason': 'two elements share an ideal'}
        # generators suffice for the homomorphism property; all pairs while that is cheap
        if n <= 4:
            left = elements
        else:
            left = [Permutation.simple(i, n) for i in range(1, n)]
        for u in left:
            for w in elements:
                product = hecke_mul(HeckeElement(u), HeckeElement(w)).w
                if ideal_product(ideals[u], ideals[w]) != ideals[product]:
                    return checked, {}, {'n': n, 'u': str(u), 'w': str(w)}
                checked += 1
    return checked, {}, None


def _convex_case(a, b):
    """The failing property of the pair (a, b), if any."""
    product = a * b
    if not is_convex(product):
        return 'product is not convex'
    alpha_a, beta_a = theta(a)
    alpha_b, beta_b = theta(b)
    if theta(product) != (alpha_a * alpha_b, beta_a * beta_b):
        return 'theta is not multiplicative'
    if a.issubset(b) != theta_leq(a, b):
        return 'theta does not preserve and reflect the order'
    return None


@suite('convex_isomorphism', 'theta is an isomorphism of ordered monoids from convex relations')
def convex_isomorphism(n_max, seed):
    checked = 0
    details = {'exhaustive': [], 'sampled': []}
    for n in range(1, min(n_max, 6) + 1):
        plus = monotone_maps(n, Direction.INCREASING)
        minus = monotone_maps(n, Direction.DECREASING)
        if n <= 4:
            pairs = [(a, b) for a in plus for b in minus]
            elements = [theta_inverse(pair).matrix for pair in pairs]
            for pair, element in zip(pairs, elements):
                if theta(element) != pair:
                    return checked, details, {'n': n, 'matrix': element.lines(), 'reason': 'not a bijection'}
            cases = ((a, b) for a in elements for b in elements)
            details['exhaustive'].append(n)
        else:
            rng = random.Random('{}:{}'.format(seed, n))

            def sample():
                return theta_inverse((rng.choice(plus), rng.choice(minus))).matrix

            cases = ((sample(), sample()) for _ in range(random_samples()))
            details['sampled'].append(n)
        for a, b in cases:
            reason = _convex_case(a, b)
            if reason is not None:
                return checked, details, {'n': n, 'a': a.lines(), 'b': b.lines(), 'reason': reason}
            checked += 1
    return checked, details, None


@suite('psi_two_routes', 'epsilon products agree with the interval fill of (alpha_w, beta_w)')
def psi_two_routes(n_max, seed):
    checked = 0
    for n in range(1, min(n_max, 6) + 1):
        for w in Permutation.all(n):
            # raises InternalInconsistency with the witness on disagreement
            psi(w)
            checked += 1
    return checked, {}, None


@suite('fiber_structure', 'fibers of Psi: 4321-avoiding minimum, 4231-avoiding maxima, convexity')
def fiber_structure(n_max, seed):
    checked = 0
    sizes = {}
    bound = min(n_max, 5)
    for n in range(1, bound + 1):
        by_matrix = fibers(n)
        avoiders = sum(1 for w in Permutation.all(n) if avoids(w, P4321))
        size = len(dc_monoid(n))
        sizes[str(n)] = size
        if not size == len(by_matrix) == avoiders:
            return checked, {'dc_sizes': sizes}, {
                'n': n, 'dc_size': size, 'fibers': len(by_matrix), 'avoiders': avoiders,
            }
        for matrix, members in sorted(by_matrix.items()):
            analyse_members(members)
            checked += 1
    details = {'dc_sizes': sizes, 'multi_maximal': None}
    found = first_multi_maximal_fiber(bound)
    if found is not None:
        n, matrix, report = found
        details['multi_maximal'] = {
            'n': n,
            'tau': str(report.tau),
            'maximal': sorted(str(w) for w in report.maximal),
        }
    return checked, details, None


@suite('catalan_fibers', 'fibers of alpha: 321- and 312-avoiding ends of a Bruhat interval')
def catalan_fibers(n_max, seed):
    checked = 0
    sizes = {}
    for n in range(1, min(n_max, 7) + 1):
        table = generate_monoid(
            catalan_generators(n),
            lambda a, b: a * b,
            MonotoneMap.identity(n),
            name='C_{}'.format(n),
        )
        sizes[str(n)] = len(table)
        expected = math.comb(2 * n, n) // (n + 1)
        if len(table) != expected:
            return checked, {'catalan_sizes': sizes}, {'n': n, 'size': len(table), 'expected': expected}
    for n in range(1, min(n_max, 5) + 1):
        for a in monotone_maps(n):
            report = catalan_fiber_analysis(a)
            if not report.interval:
                return checked, {'catalan_sizes': sizes}, {'n': n, 'alpha': str(a), 'reason': 'not an interval'}
            checked += 1
    return checked, {'catalan_sizes': sizes}, None


def _pyramid_image(n):
    if n <= 2:
        return DyckPath.pyramid(n)
    return delta(MonotoneMap(Direction.INCREASING, list(range(2, n + 1)) + [n]))


@suite('kreweras_derivative', 'the derivative of the Kreweras involution is an involution')
def kreweras_suite(n_max, seed):
    checked = 0
    mismatches = []
    for n in range(1, min(n_max, 7) + 1):
        if kreweras_derivative(DyckPath.staircase(n)) != DyckPath.staircase(n):
            return checked, {}, {'n': n, 'path': str(DyckPath.staircase(n)), 'reason': 'staircase moved'}
        if kreweras_derivative(DyckPath.pyramid(n)) != _pyramid_image(n):
            return checked, {}, {'n': n, 'path': str(DyckPath.pyramid(n)), 'reason': 'pyramid image'}
        for path in dyck_paths(n):
            if kreweras_derivative(kreweras_derivative(path)) != path:
                return checked, {}, {'n': n, 'path': str(path), 'reason': 'not an involution'}
            if not is_componentwise(path):
                mismatches.append(str(path))
            checked += 1
    return checked, {'componentwise_mismatches': mismatches}, None


@suite('h_order_covers', 'the order on C_n^+ is the closure of rectangular completions')
def h_order_covers(n_max, seed):
    checked = 0
    for n in range(1, min(n_max, 5) + 1):
        maps = monotone_maps(n)
        for a in maps:
            for b in maps:
                if prec_prime(a, b) != h_order_prec(a, b):
                    return checked, {}, {'n': n, 'a': str(a), 'b': str(b)}
                checked += 1
    return checked, {}, None


@suite('admissible_pairs', 'admissible pairs are described by the derivative and the order')
def admissible_suite(n_max, seed):
    checked = 0
    counts = {}
    for n in range(1, min(n_max, 6) + 1):
        realized = admissible_pairs(n)
        counts[str(n)] = len(realized)
        paths = dyck_paths(n)
        for first in paths:
            for second in paths:
                pair = PathPair(first, second)
                if is_admissible(pair) != (pair in realized):
                    return checked, {'counts': counts}, {
                        'n': n, 'first': str(first), 'second': str(second), 'realized': pair in realized,
                    }
                checked += 1
    return checked, {'counts': counts}, None


@suite('self_dual', 'self-dual elements of DC_n are counted by Motzkin numbers; idempotents are blocks of ones')
def self_dual(n_max, seed):
    checked = 0
    bound = min(n_max, 7)
    motzkin = motzkin_numbers(bound + 1)
    counts = {}
    for n in range(1, bound + 1):
        table = dc_monoid(n)
        count = self_dual_count(n, table)
        avoiders = [w for w in Permutation.all(n) if avoids(w, P4321)]
        if len(table) != len(avoiders):
            return checked, {'self_dual': counts}, {'n': n, 'dc_size': len(table), 'avoiders': len(avoiders)}
        involutions = sum(1 for w in avoiders if (w * w).is_identity())
        counts[str(n)] = count
        if not count == involutions == motzkin[n]:
            return checked, {'self_dual': counts}, {
                'n': n, 'self_dual': count, 'involutions': involutions, 'motzkin': motzkin[n],
            }
        idempotents = dc_idempotents(n, table)
        expected = 2 ** (n - 1)
        if len(idempotents) != expected or not all(is_block_of_ones(x.matrix) for x in idempotents):
            return checked, {'self_dual': counts}, {'n': n, 'idempotents': len(idempotents), 'expected': expected}
        if n <= 6 and len(hecke_monoid(n).idempotents()) != expected:
            return checked, {'self_dual': counts}, {'n': n, 'reason': 'H_n idempotent count'}
        checked += 1
    return checked, {'self_dual': counts}, None


@suite('presentation', 'DC_n is presented by the 0-Hecke relations and the length six relation')
def presentation_suite(n_max, seed):
    checked = 0
    sizes = {}
    for n in range(2, min(n_max, 5) + 1):
        report = verify_presentation(n)
        sizes[str(n)] = report.presented_size
        if not (report.matches and report.stable):
            return checked, {'presented_sizes': sizes}, {
                'n': n, 'presented_size': report.presented_size,
                'matches': report.matches, 'stable': report.stable,
            }
        checked += 1
    return checked, {'presented_sizes': sizes}, None


@suite('max_coset_reps', 'z_w e_J is the longest element of w W_J')
def max_coset_reps(n_max, seed):
    checked = 0
    for system in _coxeter_systems(min(n_max - 1, 4)):
        for J, _ in coxeter_idempotents(system):
            for block in cosets(system, J):
                top = max(block, key=lambda k: system.lengths[k])
                for w in sorted(block):
                    if coset_max_rep(system, J, w) != top or not is_max_rep(system, J, top):
                        return checked, {}, {
                            'system': system.name, 'J': _labels(J), 'w': system.element_label(w),
                        }
                    checked += 1
    return checked, {}, None


@suite('eigenspaces', 'e_t on P_(s) splits into fixed vectors and two element orbit differences')
def eigenspaces(n_max, seed):
    checked = 0
    for system in _coxeter_systems(min(n_max - 1, 4)):
        for s in range(system.rank):
            module = build_P(system, s)
            for t in range(system.rank):
                if not eigen_check(module, t):
                    return checked, {}, {'system': system.name, 's': s + 1, 't': t + 1}
                checked += 1
    return checked, {}, None


@suite('simple_socle', "P'_(s) has the simple socle spanned by z_{w0 s} - z_w0")
def simple_socle_suite(n_max, seed):
    checked = 0
    for system in _coxeter_systems(min(n_max - 1, 4)):
        for s in range(system.rank):
            result = simple_socle(system, s)
            if not result['holds']:
                return checked, {}, {
                    'system': system.name,
                    's': s + 1,
                    'dimension': result['dimension'],
                    'type': _labels(result['type']) if result['type'] is not None else None,
                    'expected_type': _labels(result['expected_type']),
                }
            checked += 1
    return checked, {}, None


@suite('min_dim_hecke', "the sum of the P'_(s) is effective of dimension v(W) - r(W)")
def min_dim_hecke(n_max, seed):
    checked = 0
    dimensions = {}
    systems = [type_a(n - 1) for n in range(3, min(n_max, 5) + 1)]
    systems += [type_b(2), type_b(3)] + [dihedral(m) for m in range(2, 7)]
    for system in systems:
        report = min_dim_report(system)
        dimensions[system.name] = report['claimed']
        if not (report['claimed'] == report['constructed_dim'] and report['effective']
                and report['relations'] and report['socle_verified']):
            return checked, {'dimensions': dimensions}, report
        checked += 1
    return checked, {'dimensions': dimensions}, None


@suite('min_dim_double_catalan', "P'_(s_1) + P'_(s_{n-1}) is an effective DC_n-module of dimension 2n - 2")
def min_dim_double_catalan(n_max, seed):
    checked = 0
    for n in range(2, min(n_max, 6) + 1):
        report = dc_min_dim_check(n)
        if report['dim'] != report['expected_dim'] or not report['effective']:
            return checked, {}, report
        checked += 1
    return checked, {}, None
