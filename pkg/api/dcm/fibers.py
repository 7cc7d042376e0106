"""Fibers of Psi over DC_n and of w -> alpha(w) over C_n^+."""

# Utilities
import logging

# Models
from api.dcm.models import CatalanFiberReport, DCElement, FiberReport
from api.perms.models import Permutation

# Dcm
from api.dcm.generators import psi
from api.dcm.monoid import check_degree

# Perms
from api.perms.bruhat import bruhat_leq
from api.perms.patterns import avoids
from api.perms.statistics import alpha

# Exceptions
from api.utils.exceptions import InternalInconsistency, InvalidInput


logger = logging.getLogger(__name__)

P4321 = Permutation.parse('4321')
P4231 = Permutation.parse('4231')
P321 = Permutation.parse('321')
P312 = Permutation.parse('312')


def fibers(n, limit=None):
    """Every fiber of Psi in degree n, keyed by matrix."""
    check_degree(n, limit)
    result = {}
    for w in Permutation.all(n):
        result.setdefault(psi(w).matrix, []).append(w)
    return result


def fiber(x, limit=None):
    matrix = x.matrix if isinstance(x, DCElement) else x
    check_degree(matrix.n, limit)
    members = frozenset(w for w in Permutation.all(matrix.n) if psi(w).matrix == matrix)
    if not members:
        raise InvalidInput('the matrix is not an element of DC_{}'.format(matrix.n))
    return members


def _minimal(members):
    return {u for u in members if not any(v != u and bruhat_leq(v, u) for v in members)}


def _maximal(members):
    return {u for u in members if not any(v != u and bruhat_leq(u, v) for v in members)}


def analyse_members(members):
    members = frozenset(members)
    if not members:
        raise InvalidInput('empty fiber')
    n = next(iter(members)).n
    avoiders = {w for w in members if avoids(w, P4321)}
    minimal = _minimal(members)
    if len(avoiders) != 1 or minimal != avoiders:
        raise InternalInconsistency(
            'fiber has no unique 4321-avoiding minimum',
            witness={'members': sorted(str(w) for w in members)},
        )
    tau = next(iter(avoiders))
    maximal = _maximal(members)
    if maximal != {w for w in members if avoids(w, P4231)}:
        raise InternalInconsistency(
            'Bruhat maximal members are not the 4231-avoiding ones',
            witness={'members': sorted(str(w) for w in members)},
        )
    convex = all(
        v in members
        for v in Permutation.all(n)
        if bruhat_leq(tau, v) and any(bruhat_leq(v, top) for top in maximal)
    )
    if not convex:
        logger.warning('fiber over tau=%s is not Bruhat convex', tau)
        raise InternalInconsistency(
            'fiber over {} is not Bruhat convex'.format(tau),
            witness={'members': sorted(str(w) for w in members), 'tau': str(tau)},
        )
    return FiberReport(members=members, tau=tau, maximal=maximal, convex=convex)


def fiber_analysis(x, limit=None):
    return analyse_members(fiber(x, limit))


def first_multi_maximal_fiber(n_max, limit=None):
    """First fiber, scanning degrees upward, with several Bruhat maximal members."""
    for n in range(1, n_max + 1):
        for matrix, members in sorted(fibers(n, limit).items()):
            maximal = _maximal(members)
            if len(maximal) > 1:
                logger.info('degree %d: fiber with %d maximal members', n, len(maximal))
                return n, matrix, analyse_members(members)
    return None


def catalan_pi(a):
    """pi(i) = a(i) when a jumps at i, else the least unused value."""
    used = set()
    values = []
    previous = 0
    for i in range(1, a.n + 1):
        if a(i) > previous:
            value = a(i)
        else:
            value = min(set(range(1, a.n + 1)) - used)
        used.add(value)
        values.append(value)
        previous = a(i)
    return Permutation(values)


def catalan_fiber_analysis(a, limit=None):
    check_degree(a.n, limit)
    members = frozenset(w for w in Permutation.all(a.n) if alpha(w) == a)
    pi = catalan_pi(a)
    avoiders_321 = {w for w in members if avoids(w, P321)}
    avoiders_312 = [w for w in members if avoids(w, P312)]
    if avoiders_321 != {pi} or len(avoiders_312) != 1:
        raise InternalInconsistency(
            'fiber of {} has no unique 321- and 312-avoiding members'.format(a),
            witness={'members': sorted(str(w) for w in members), 'pi': str(pi)},
        )
    pi_prime = avoiders_312[0]
    interval = frozenset(
        v for v in Permutation.all(a.n) if bruhat_leq(pi, v) and bruhat_leq(v, pi_prime)
    )
    return CatalanFiberReport(members=members, pi=pi, pi_prime=pi_prime, interval=interval == members)
