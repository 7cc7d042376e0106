"""Breadth-first closure of a finite monoid."""

# Utilities
import logging

# Models
from api.boolmat.models import MonoidTable

# Exceptions
from api.utils.exceptions import CapExceeded

# Utils
from api.utils.config import element_cap


logger = logging.getLogger(__name__)


def generate_monoid(generators, product, identity, cap=None, name='monoid'):
    """Submonoid generated by ``generators`` under the associative ``product``.

    Generators act on the right, level by level, so every element gets a
    shortest word and the numbering depends only on the generator order.
    Elements must be hashable.
    """
    cap = cap if cap is not None else element_cap()
    elements = [identity]
    index = {identity: 0}
    words = [()]
    right = []
    frontier = [0]
    while frontier:
        next_frontier = []
        for k in frontier:
            element = elements[k]
            edges = []
            for g, generator in enumerate(generators):
                target = product(element, generator)
                found = index.get(target)
                if found is None:
                    found = len(elements)
                    if found >= cap:
                        logger.warning('%s: closure stopped at the cap of %d elements', name, cap)
                        raise CapExceeded(name, cap)
                    index[target] = found
                    elements.append(target)
                    words.append(words[k] + (g,))
                    next_frontier.append(found)
                edges.append(found)
            right.append(tuple(edges))
        frontier = next_frontier
    logger.debug('%s: %d elements', name, len(elements))
    return MonoidTable(
        elements=elements,
        generators=[index[generator] for generator in generators],
        right=right,
        words=words,
        multiply=product,
    )
