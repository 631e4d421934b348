#!/usr/bin/env python
# vim: set expandtab tabstop=4 shiftwidth=4:

from tempeuler.management.base import TempEulerCommand
from tempeuler.models import App
from tempeuler.poly import orlin_check
from tempeuler import formats

class Command(TempEulerCommand):

    # Help text
    help = 'Tests whether a dynamic digraph (.ddg) has an Eulerian tour'

    def add_arguments(self, parser):
        parser.add_argument('input',
                type=str,
                help='Dynamic digraph to test')
        parser.add_argument('--json',
                action='store_true',
                help='Print one JSON result document instead of text')

    def run(self, **options):
        digraph = self.load(formats.parse_ddg, options['input'])
        result = orlin_check(digraph)

        if self.json_output:
            self.emit_json('orlin', {
                'status': 'feasible' if result.feasible else 'infeasible',
                'failed_condition': result.failed_condition,
                'reason': result.reason,
            })
        elif result.feasible:
            self.report([(App.STATUS_SUCCESS, 'feasible: %s' % (result.reason))])
        else:
            self.report([(App.STATUS_INFO, 'infeasible: condition %d fails, %s' % (
                result.failed_condition, result.reason))])

        if not result.feasible:
            self.fail('infeasible', App.EXIT_INFEASIBLE)
