"""Foldings of the Coxeter complex of S_n acting on ordered set partitions."""

# Models
from api.hecke.models import OrderedSetPartition
from api.perms.models import Permutation

# Exceptions
from api.utils.exceptions import InvalidInput


def fold(i, partition):
    """phi_i: exchange i and i + 1 when the block of i comes first."""
    if not 1 <= i < partition.n:
        raise InvalidInput('phi_{} does not exist in degree {}'.format(i, partition.n))
    first, second = partition.block_of(i), partition.block_of(i + 1)
    if first >= second:
        return partition
    swap = {i: i + 1, i + 1: i}
    return OrderedSetPartition(
        [swap.get(point, point) for point in block] for block in partition.blocks
    )


def act_word(letters, partition):
    """Apply phi_i1 ... phi_ik, the last letter first."""
    for letter in reversed(letters):
        partition = fold(letter, partition)
    return partition


def chamber(w):
    """({w(1)}, ..., {w(n)})."""
    if w.n < 2:
        raise InvalidInput('the Coxeter complex of S_1 has no chambers')
    return OrderedSetPartition([{v} for v in w.values])


def chamber_permutation(partition):
    if not partition.is_chamber():
        raise InvalidInput('{} is not a chamber'.format(partition))
    return Permutation(next(iter(block)) for block in partition.blocks)


def chambers(n):
    return [chamber(w) for w in Permutation.all(n)]


def face_type(partition):
    """Positions after which a block ends, i.e. the set J of the face."""
    boundaries = set()
    position = 0
    for block in partition.blocks[:-1]:
        position += len(block)
        boundaries.add(position)
    return frozenset(boundaries)
