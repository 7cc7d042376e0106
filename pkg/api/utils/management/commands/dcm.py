"""Double Catalan monoid DC_n: Psi, fibers, counts and the presentation."""

# Django
from django.core.management.base import CommandError

# Django REST Framework
from rest_framework import serializers

# Models
from api.boolmat.models import BoolMatrix
from api.perms.models import Permutation

# Boolmat
from api.boolmat.export import table_to_dot

# Dcm
from api.dcm.fibers import catalan_fiber_analysis, fiber_analysis
from api.dcm.generators import psi
from api.dcm.monoid import dc_idempotents, dc_monoid, motzkin_numbers, self_dual_count
from api.dcm.presentation import verify_presentation

# Serializers
from api.boolmat.serializers import BoolMatrixSerializer, MonoidSummarySerializer
from api.dcm.serializers import (
    CatalanFiberReportSerializer,
    DCElementSerializer,
    FiberReportSerializer,
    PresentationReportSerializer,
)
from api.perms.serializers import MonotoneMapField, PermutationSerializer

# Utils
from api.utils.commands import CatkitCommand, CommandResult


ACTIONS = ('count', 'psi', 'fiber', 'catalan-fibers', 'self-dual', 'idempotents', 'verify-presentation')


class Command(CatkitCommand):
    help = 'Psi, fibers, counts, self-dual elements and the presentation of DC_n.'

    def add_command_arguments(self, parser):
        parser.add_argument('action', nargs='?', default='count', choices=ACTIONS)
        parser.add_argument('operand', nargs='?', help='a permutation for psi, matrix rows joined by / for fiber, a monotone map for catalan-fibers')
        parser.add_argument('--force', action='store_true', help='allow large presentation checks')

    def _operand(self, options):
        if not options['operand']:
            raise CommandError('{} needs an operand'.format(options['action']))
        return options['operand']

    def run(self, **options):
        action = options['action']
        if action == 'psi':
            w = Permutation.parse(self._operand(options))
            return CommandResult(dict(DCElementSerializer(psi(w)).data, permutation=PermutationSerializer(w).data))
        if action == 'fiber':
            matrix = BoolMatrix.from_strings(self._operand(options).split('/'))
            return CommandResult(FiberReportSerializer(fiber_analysis(matrix)).data)
        if action == 'catalan-fibers':
            try:
                a = MonotoneMapField().to_internal_value(self._operand(options))
            except serializers.ValidationError as error:
                raise CommandError(str(error.detail))
            report = catalan_fiber_analysis(a)
            data = dict(alpha=str(a), **CatalanFiberReportSerializer(report).data)
            return CommandResult(data, passed=report.interval, counterexample=data)
        n = self.require_n()
        if action == 'verify-presentation':
            report = verify_presentation(n, force=options['force'])
            data = PresentationReportSerializer(report).data
            return CommandResult(data, passed=report.matches and report.stable, counterexample=data)
        table = dc_monoid(n, cap=self.config['cap'])
        if action == 'self-dual':
            count = self_dual_count(n, table)
            motzkin = motzkin_numbers(n + 1)[n]
            data = {'n': n, 'self_dual': count, 'motzkin': motzkin}
            return CommandResult(data, passed=count == motzkin, counterexample=data)
        if action == 'idempotents':
            found = dc_idempotents(n, table)
            return CommandResult({
                'n': n,
                'count': len(found),
                'idempotents': [BoolMatrixSerializer(x.matrix).data for x in found],
            })
        names = ['eps{}'.format(i) for i in range(1, n)]
        return CommandResult(
            dict(n=n, **MonoidSummarySerializer(table).data),
            dot=table_to_dot(table, generator_names=names, name='DC_{}'.format(n)),
        )
