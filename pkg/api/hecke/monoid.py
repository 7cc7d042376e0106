"""H_n as a MonoidTable."""

# Utilities
import logging

# Models
from api.hecke.models import HeckeElement

# Boolmat
from api.boolmat.closure import generate_monoid


logger = logging.getLogger(__name__)


def hecke_monoid(n, cap=None):
    generators = [HeckeElement.generator(i, n) for i in range(1, n)]
    return generate_monoid(
        generators,
        lambda a, b: a * b,
        HeckeElement.identity(n),
        cap=cap,
        name='H_{}'.format(n),
    )


def is_j_trivial(table):
    """Distinct elements generate distinct two-sided ideals."""
    seen = set()
    for k in range(len(table)):
        ideal = table.two_sided_ideal(k)
        if ideal in seen:
            logger.warning('two elements share the ideal of element %d', k)
            return False
        seen.add(ideal)
    return True
