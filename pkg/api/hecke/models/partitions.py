"""Ordered set partitions, the faces of the Coxeter complex of S_n."""

# Utilities
import attr
import re

# Exceptions
from api.utils.exceptions import InvalidInput


BLOCK_PATTERN = re.compile(r'\{([^{}]*)\}')


def _check_blocks(instance, attribute, blocks):
    if len(blocks) < 2:
        raise InvalidInput('an ordered set partition needs at least two blocks')
    if any(not block for block in blocks):
        raise InvalidInput('blocks must be non-empty')
    points = [point for block in blocks for point in block]
    if sorted(points) != list(range(1, len(points) + 1)):
        raise InvalidInput('blocks must partition 1..n')


@attr.s(frozen=True, slots=True, repr=False)
class OrderedSetPartition:
    blocks = attr.ib(converter=lambda blocks: tuple(frozenset(b) for b in blocks), validator=_check_blocks)

    @property
    def n(self):
        return sum(len(block) for block in self.blocks)

    @classmethod
    def parse(cls, text):
        """Parse "({1,3},{2,4})"."""
        blocks = []
        for match in BLOCK_PATTERN.finditer(text):
            body = match.group(1).strip()
            try:
                blocks.append([int(part) for part in body.split(',')] if body else [])
            except ValueError:
                raise InvalidInput('cannot parse {!r}'.format(text))
        return cls(blocks)

    def block_of(self, point):
        for k, block in enumerate(self.blocks):
            if point in block:
                return k
        raise InvalidInput('{} is not a point of {}'.format(point, self))

    def is_chamber(self):
        return all(len(block) == 1 for block in self.blocks)

    def __str__(self):
        return '({})'.format(','.join(
            '{' + ','.join(str(p) for p in sorted(block)) + '}' for block in self.blocks
        ))

    def __repr__(self):
        return 'OrderedSetPartition{}'.format(self)
