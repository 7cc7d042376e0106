"""0-Hecke monoid H_n: products, Bruhat ideals, idempotents and foldings."""

# Django
from django.core.management.base import CommandError

# Django REST Framework
from rest_framework import serializers

# Boolmat
from api.boolmat.export import table_to_dot

# Hecke
from api.hecke.foldings import fold
from api.hecke.ideals import bruhat_ideal
from api.hecke.idempotents import idempotents
from api.hecke.monoid import hecke_monoid, is_j_trivial

# Serializers
from api.boolmat.serializers import MonoidSummarySerializer
from api.hecke.serializers import HeckeElementField, OrderedSetPartitionField, PermutationSetField

# Utils
from api.utils.commands import CatkitCommand, CommandResult


class Command(CatkitCommand):
    help = 'Products, Bruhat ideals, idempotents and foldings of H_n.'

    def add_command_arguments(self, parser):
        action = parser.add_mutually_exclusive_group()
        action.add_argument('--mul', nargs=2, metavar=('A', 'B'), help='the product z_A z_B')
        action.add_argument('--ideal', metavar='W', help='the Bruhat ideal below W')
        action.add_argument('--idempotents', action='store_true', help='every idempotent of H_n')
        action.add_argument('--fold', nargs=2, metavar=('I', 'F'), help='phi_I applied to the ordered set partition F')

    def _parse(self, field, text):
        try:
            return field.to_internal_value(text)
        except serializers.ValidationError as error:
            raise CommandError(str(error.detail))

    def run(self, **options):
        element = HeckeElementField()
        if options['mul']:
            a, b = (self._parse(element, text) for text in options['mul'])
            return CommandResult({
                'a': element.to_representation(a),
                'b': element.to_representation(b),
                'product': element.to_representation(a * b),
            })
        if options['ideal']:
            w = self._parse(element, options['ideal']).w
            ideal = bruhat_ideal(w)
            return CommandResult({'w': str(w), 'size': len(ideal), 'ideal': PermutationSetField().to_representation(ideal)})
        if options['fold']:
            i, text = options['fold']
            try:
                i = int(i)
            except ValueError:
                raise CommandError('I must be a number')
            field = OrderedSetPartitionField()
            partition = self._parse(field, text)
            return CommandResult({
                'i': i,
                'partition': field.to_representation(partition),
                'image': field.to_representation(fold(i, partition)),
            })
        n = self.require_n()
        if options['idempotents']:
            found = idempotents(n)
            return CommandResult({'n': n, 'count': len(found), 'idempotents': [str(z) for z in found]})
        table = hecke_monoid(n, cap=self.config['cap'])
        names = ['e{}'.format(i) for i in range(1, n)]
        return CommandResult(
            dict(n=n, j_trivial=is_j_trivial(table), **MonoidSummarySerializer(table).data),
            dot=table_to_dot(table, generator_names=names, name='H_{}'.format(n)),
        )
