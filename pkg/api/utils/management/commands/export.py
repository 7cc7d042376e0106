"""Export a monoid table as JSON or as a DOT Cayley graph."""

# Django
from django.core.management.base import CommandError

# Models
from api.perms.models import MonotoneMap

# Boolmat
from api.boolmat.closure import generate_monoid
from api.boolmat.export import export_cayley, table_to_dict

# Coxeter
from api.coxeter.quotients import generalized_catalan_quotient, generalized_double_catalan

# Dcm
from api.dcm.monoid import dc_monoid

# Hecke
from api.hecke.monoid import hecke_monoid

# Perms
from api.perms.statistics import catalan_generators

# Utils
from api.utils.commands import CommandResult, CoxeterCommand


TARGETS = ('hecke', 'dcm', 'catalan', 'quotient', 'double-quotient')


class Command(CoxeterCommand):
    help = 'Export H_n, DC_n, C_n^+ or a generalized quotient: --json for the table, --dot for the Cayley graph.'

    def add_command_arguments(self, parser):
        parser.add_argument('target', choices=TARGETS)
        parser.add_argument('--product', action='store_true', help='include the full product table')
        super().add_command_arguments(parser)

    def get_table(self, target, options):
        cap = self.config['cap']
        if target in ('quotient', 'double-quotient'):
            system = self.get_system(options)
            J = self.get_J(system, options)
            build = generalized_catalan_quotient if target == 'quotient' else generalized_double_catalan
            return build(system, J, cap=cap), 'e', '{}({})'.format(target, system.name)
        n = self.require_n()
        if target == 'hecke':
            return hecke_monoid(n, cap=cap), 'e', 'H_{}'.format(n)
        if target == 'dcm':
            return dc_monoid(n, cap=cap), 'eps', 'DC_{}'.format(n)
        table = generate_monoid(
            catalan_generators(n), lambda a, b: a * b, MonotoneMap.identity(n), cap=cap, name='C_{}'.format(n),
        )
        return table, 'e', 'C_{}'.format(n)

    def run(self, **options):
        if self.config['format'] == 'text':
            raise CommandError('export needs --json or --dot')
        table, prefix, name = self.get_table(options['target'], options)
        names = ['{}{}'.format(prefix, g + 1) for g in range(len(table.generators))]
        return CommandResult(
            dict(name=name, **table_to_dict(table, generator_names=names, include_product=options['product'])),
            dot=export_cayley(table, generator_names=names, name=name),
        )
