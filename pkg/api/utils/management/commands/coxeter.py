"""Finite Coxeter systems: parabolics, the complex counts and generalized Catalan quotients."""

# Boolmat
from api.boolmat.export import table_to_dict, table_to_dot

# Coxeter
from api.coxeter.complex import effective_on_sets, longest_coset_cover, vertex_count
from api.coxeter.parabolics import parabolic
from api.coxeter.quotients import generalized_catalan_quotient, generalized_double_catalan

# Serializers
from api.coxeter.serializers import CoxeterSystemSerializer, ParabolicSerializer

# Utils
from api.utils.commands import CommandResult, CoxeterCommand


ACTIONS = ('summary', 'parabolic', 'quotient', 'double-quotient', 'complex')


class Command(CoxeterCommand):
    help = 'Coxeter system data and the generalized (double) Catalan quotients of H(W).'

    def add_command_arguments(self, parser):
        parser.add_argument('action', nargs='?', default='summary', choices=ACTIONS)
        super().add_command_arguments(parser)

    def run(self, **options):
        system = self.get_system(options)
        action = options['action']
        if action == 'summary':
            return CommandResult(CoxeterSystemSerializer(system).data)
        if action == 'complex':
            covers = []
            for s in range(system.rank):
                cover = longest_coset_cover(system, s)
                covers.append(dict(cover, element=system.element_label(cover['element'])))
            return CommandResult({
                'system': system.name,
                'vertex_count': vertex_count(system),
                'rank': system.rank,
                'sets': effective_on_sets(system),
                'longest_cosets': covers,
            })
        J = self.get_J(system, options)
        if action == 'parabolic':
            return CommandResult(ParabolicSerializer(parabolic(system, J), context={'system': system}).data)
        if action == 'quotient':
            table = generalized_catalan_quotient(system, J, cap=self.config['cap'])
        else:
            table = generalized_double_catalan(system, J, cap=self.config['cap'])
        names = ['e{}'.format(s + 1) for s in range(system.rank)]
        return CommandResult(
            table_to_dict(table, generator_names=names, include_product=True),
            dot=table_to_dot(table, generator_names=names, name=action),
        )
