"""Exact linear algebra reports on H(W)-modules."""

# Django
from django.core.management.base import CommandError

# Repmin
from api.repmin.effective import dc_min_dim_check, min_dim_report
from api.repmin.modules import build_P, split_P
from api.repmin.socle import simple_socle, socle

# Serializers
from api.repmin.serializers import (
    DCMinDimSerializer,
    HeckeModuleSerializer,
    MinDimReportSerializer,
    SimpleSocleSerializer,
    SocleReportSerializer,
)

# Utils
from api.utils.commands import CommandResult, CoxeterCommand


class Command(CoxeterCommand):
    help = "Socles and effective dimensions of the modules P'_(s); --n checks the DC_n module."

    default_type = 'A2'

    def add_command_arguments(self, parser):
        parser.add_argument('action', nargs='?', default='report', choices=('report', 'socle', 'module'))
        parser.add_argument('--modulus', type=int, help='work over the prime field of this order')
        super().add_command_arguments(parser)

    def run(self, **options):
        modulus = options.get('modulus')
        action = options['action']
        if self.config['n'] is not None:
            if action != 'report':
                raise CommandError('--n only applies to the report')
            data = DCMinDimSerializer(dc_min_dim_check(self.config['n'], modulus=modulus)).data
            passed = data['effective'] and data['dim'] == data['expected_dim']
            return CommandResult(data, passed=passed, counterexample=data)
        system = self.get_system(options)
        if action == 'report':
            report = min_dim_report(system, modulus=modulus)
            data = dict(MinDimReportSerializer(report).data)
            data['socles'] = [
                SimpleSocleSerializer(simple_socle(system, s, modulus)).data for s in range(system.rank)
            ]
            passed = report['claimed'] == report['constructed_dim'] and report['effective'] and report['socle_verified']
            return CommandResult(data, passed=passed, counterexample=data)
        if options.get('maximal') is None:
            raise CommandError('--maximal s selects the module')
        s = options['maximal'] - 1
        if not 0 <= s < system.rank:
            raise CommandError('no generator {} in rank {}'.format(s + 1, system.rank))
        prime, _ = split_P(build_P(system, s, modulus))
        if action == 'socle':
            return CommandResult(SocleReportSerializer(socle(prime)).data)
        return CommandResult(HeckeModuleSerializer(prime).data)
