"""Base class of the catkit management commands."""

# Django
from django.core.management.base import BaseCommand, CommandError

# Django REST Framework
from rest_framework import serializers

# Utilities
import attr
import json

# Serializers
from api.coxeter.serializers import GeneratorSetField
from api.utils.serializers import RunConfigSerializer

# Coxeter
from api.coxeter.builders import build_coxeter
from api.coxeter.parabolics import maximal_parabolic

# Exceptions
from api.utils.exceptions import CatkitError

# Utils
from api import __version__
from api.utils.config import default_seed
from api.utils.renderers import render_json


@attr.s(frozen=True)
class CommandResult:
    """What a command produced: report data, an optional DOT graph and the verdict."""

    data = attr.ib()
    dot = attr.ib(default=None)
    passed = attr.ib(default=True)
    counterexample = attr.ib(default=None)


class CatkitCommand(BaseCommand):
    """Shared flags, option validation and report output.

    Subclasses implement ``add_command_arguments`` and ``run`` and return a
    CommandResult. Library errors become CommandError; failed checks write
    their counterexample to stderr and exit with status 1.
    """

    def add_arguments(self, parser):
        parser.add_argument('--n', type=int, help='degree, or largest degree for verify_all')
        parser.add_argument('--type', help='Coxeter type: A4, B3 or I2:6')
        output = parser.add_mutually_exclusive_group()
        output.add_argument('--json', action='store_true', help='JSON report on stdout')
        output.add_argument('--dot', action='store_true', help='DOT graph on stdout')
        parser.add_argument('--cap', type=int, help='element cap of closures')
        parser.add_argument('--jobs', type=int, help='worker processes')
        parser.add_argument('--seed', type=int, help='seed of randomized suites')
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def get_config(self, options):
        fmt = 'json' if options.get('json') else 'dot' if options.get('dot') else 'text'
        serializer = RunConfigSerializer(data={
            'command': self.name,
            'action': options.get('action') or options.get('target'),
            'n': options.get('n'),
            'type': options.get('type'),
            'format': fmt,
            'cap': options.get('cap'),
            'jobs': options.get('jobs'),
            'seed': options.get('seed'),
        })
        if not serializer.is_valid():
            raise CommandError(json.dumps(serializer.errors, sort_keys=True))
        config = dict(serializer.validated_data)
        if config['seed'] is None:
            config['seed'] = default_seed()
        return config

    @property
    def name(self):
        return self.__module__.rsplit('.', 1)[-1]

    def handle(self, *args, **options):
        self.config = self.get_config(options)
        try:
            result = self.run(**options)
        except CatkitError as error:
            raise CommandError(str(error))
        self.emit(result)
        if not result.passed:
            self.stderr.write(render_json(result.counterexample))
            raise CommandError('{}: check failed'.format(self.name), returncode=1)

    def run(self, **options):
        raise NotImplementedError

    def require_n(self, minimum=1):
        n = self.config['n']
        if n is None:
            raise CommandError('--n is required')
        if n < minimum:
            raise CommandError('--n must be at least {}'.format(minimum))
        return n

    def emit(self, result):
        fmt = self.config['format']
        if fmt == 'dot':
            if result.dot is None:
                raise CommandError('{} has no DOT output'.format(self.name))
            self.stdout.write(result.dot, ending='')
        elif fmt == 'json':
            self.stdout.write(render_json({
                'version': __version__,
                'config': self.config,
                'seed': self.config['seed'],
                'passed': result.passed,
                'result': result.data,
            }))
        else:
            for key, value in result.data.items():
                text = value if isinstance(value, str) else json.dumps(value, sort_keys=True)
                self.stdout.write('{}: {}'.format(key, text))


class CoxeterCommand(CatkitCommand):
    """Commands working on a finite Coxeter system."""

    default_type = None

    def add_command_arguments(self, parser):
        parser.add_argument('--gens', help='file with one generator permutation per line')
        parser.add_argument('--matrix', help='file with the rows of the Coxeter matrix')
        parser.add_argument('--J', dest='J', help='generator numbers, e.g. 1,3')
        parser.add_argument('--maximal', type=int, help='use J = S minus {s}')

    def get_system(self, options):
        cap = self.config['cap']
        if options.get('gens'):
            if not options.get('matrix'):
                raise CommandError('--gens needs --matrix')
            try:
                with open(options['gens']) as handle:
                    generators = [line.strip() for line in handle if line.strip()]
                with open(options['matrix']) as handle:
                    matrix = [[int(v) for v in line.split()] for line in handle if line.strip()]
            except OSError as error:
                raise CommandError('cannot read {}: {}'.format(error.filename, error.strerror))
            except ValueError:
                raise CommandError('Coxeter matrix entries must be integers')
            return build_coxeter({'generators': generators, 'matrix': matrix, 'name': 'W'}, cap=cap)
        description = self.config['type'] or self.default_type
        if description is None:
            raise CommandError('--type or --gens/--matrix is required')
        return build_coxeter(description, cap=cap)

    def get_J(self, system, options):
        if options.get('maximal') is not None:
            return maximal_parabolic(system, options['maximal'] - 1)
        if options.get('J') is None:
            raise CommandError('--J or --maximal is required')
        try:
            return GeneratorSetField().to_internal_value(options['J'])
        except serializers.ValidationError as error:
            raise CommandError(str(error.detail))
