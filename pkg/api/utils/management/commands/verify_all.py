"""Runs every verification suite up to a degree."""

# Django
from django.core.management.base import CommandError

# Verification
from api.verification.runner import DEFAULT_N_MAX, first_failure, run_verify_all
from api.verification.suites import SUITES

# Serializers
from api.verification.serializers import SuiteResultSerializer

# Utils
from api.utils.commands import CatkitCommand, CommandResult


class Command(CatkitCommand):
    help = 'Run the exhaustive and randomized verification suites; exit status 1 on the first failure.'

    def add_command_arguments(self, parser):
        parser.add_argument('--only', nargs='+', metavar='SUITE', help='run these suites only')

    def run(self, **options):
        n_max = self.config['n'] if self.config['n'] is not None else DEFAULT_N_MAX
        if n_max < 1:
            raise CommandError('--n must be at least 1')
        keys = options.get('only')
        if keys:
            unknown = sorted(set(keys) - set(SUITES))
            if unknown:
                raise CommandError('unknown suites {}; choose from {}'.format(', '.join(unknown), ', '.join(SUITES)))
        results = run_verify_all(n_max, jobs=self.config['jobs'], seed=self.config['seed'], keys=keys)
        failure = first_failure(results)
        data = {
            'n_max': n_max,
            'matrix': {result.key: result.passed for result in results},
            'suites': SuiteResultSerializer(results, many=True).data,
        }
        counterexample = None
        if failure is not None:
            counterexample = {'suite': failure.key, 'statement': failure.statement, 'counterexample': failure.counterexample}
        return CommandResult(data, passed=failure is None, counterexample=counterexample)
