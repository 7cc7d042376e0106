"""Dyck paths: the Kreweras derivative, admissible pairs and the order on C_n^+."""

# Django
from django.core.management.base import CommandError

# Models
from api.dyck.models import DyckPath, PathPair
from api.perms.models import Permutation

# Dyck
from api.dyck.admissible import admissible_pair_of, is_admissible
from api.dyck.bijection import delta_inverse
from api.dyck.kreweras import is_componentwise, kreweras_derivative
from api.dyck.orders import cover_rectangular, h_order_prec

# Serializers
from api.dyck.serializers import PathPairSerializer

# Utils
from api.utils.commands import CatkitCommand, CommandResult


ARITY = {'derivative': 1, 'covers': 1, 'admissible': 2, 'prec': 2, 'pair': 1}


class Command(CatkitCommand):
    help = 'Kreweras derivative, admissible pairs and the order on C_n^+ through Dyck paths.'

    def add_command_arguments(self, parser):
        parser.add_argument('action', choices=sorted(ARITY))
        parser.add_argument('operands', nargs='*', help='paths over U and D, or a permutation for pair')

    def run(self, **options):
        action, operands = options['action'], options['operands']
        if len(operands) != ARITY[action]:
            raise CommandError('{} takes {} operand(s)'.format(action, ARITY[action]))
        if action == 'pair':
            return CommandResult(PathPairSerializer(admissible_pair_of(Permutation.parse(operands[0]))).data)
        paths = [DyckPath(text) for text in operands]
        if action == 'derivative':
            path = paths[0]
            return CommandResult({
                'path': str(path),
                'derivative': str(kreweras_derivative(path)),
                'componentwise': is_componentwise(path),
            })
        if action == 'covers':
            return CommandResult({'path': str(paths[0]), 'covers': sorted(str(p) for p in cover_rectangular(paths[0]))})
        if action == 'admissible':
            pair = PathPair(*paths)
            return CommandResult(dict(PathPairSerializer(pair).data, admissible=is_admissible(pair)))
        a, b = (delta_inverse(path) for path in paths)
        return CommandResult({'a': str(a), 'b': str(b), 'prec': h_order_prec(a, b)})
