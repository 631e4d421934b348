#!/usr/bin/env python
# vim: set expandtab tabstop=4 shiftwidth=4:

from tempeuler.management.base import TempEulerCommand
from tempeuler.models import App
from tempeuler.exact import SolveResult, two_trail_cover_exact
from tempeuler import formats

class Command(TempEulerCommand):

    # Help text
    help = 'Decides whether two trails cover every edge of a graph (.tg, labels ignored)'

    def add_arguments(self, parser):
        parser.add_argument('input',
                type=str,
                help='Graph to cover')
        parser.add_argument('--budget',
                type=int,
                help='Override the cover search edge budget')
        parser.add_argument('--node-limit',
                type=int,
                dest='node_limit',
                help='Override the search node limit (0 disables it)')
        parser.add_argument('--json',
                action='store_true',
                help='Print one JSON result document instead of text')

    def run(self, **options):
        graph = self.load(formats.parse_tg, options['input'])
        budget = self.option_or_pref(options, 'budget', 'cover_budget')
        node_limit = self.option_or_pref(options, 'node_limit', 'node_limit')

        retlines = []
        result = two_trail_cover_exact(graph, budget=budget, node_limit=node_limit, retlines=retlines)
        if result.status == SolveResult.FEASIBLE:
            App.log(retlines, App.STATUS_SUCCESS, 'feasible: two trails cover %d edges' % (graph.edge_count))
            for (idx, trail) in enumerate(result.witness, 1):
                vertices = [graph.name(v) for v in trail.vertices() if v is not None]
                App.log(retlines, App.STATUS_INFO, 'trail %d: %s' % (idx, ' -> '.join(vertices)))
        elif result.status == SolveResult.INFEASIBLE:
            App.log(retlines, App.STATUS_INFO, 'infeasible: no two trails cover the graph')
        else:
            App.log(retlines, App.STATUS_ERROR, 'budget exceeded: %s' % (result.reason))

        if self.json_output:
            trails = None
            if result.witness is not None:
                trails = [self.walk_document(trail) for trail in result.witness]
            self.emit_json('cover', {
                'status': result.status,
                'stats': result.stats,
                'trails': trails,
            })
        else:
            self.report(retlines)

        if result.status == SolveResult.INFEASIBLE:
            self.fail('infeasible', App.EXIT_INFEASIBLE)
        elif result.status == SolveResult.BUDGET_EXCEEDED:
            self.fail('budget exceeded', App.EXIT_BUDGET)
