#!/usr/bin/env python
# vim: set expandtab tabstop=4 shiftwidth=4:

import time

from tempeuler.management.base import TempEulerCommand
from tempeuler.models import App, ProblemVariant
from tempeuler.exact import SolveResult, solve_walk_exact, solve_local_trail_exact, solve_trail_exact
from tempeuler.verify import verify
from tempeuler import formats, poly

class Command(TempEulerCommand):

    # Help text
    help = 'Decides one of the Eulerian walk/trail problems on a temporal graph (.tg)'

    dynamic_kinds = [ProblemVariant.WALK, ProblemVariant.CLOSED_WALK,
        ProblemVariant.TRAIL, ProblemVariant.TOUR]

    budget_prefs = {
        ProblemVariant.FAMILY_WALK: 'walk_budget',
        ProblemVariant.FAMILY_LOCAL: 'local_trail_budget',
        ProblemVariant.FAMILY_TRAIL: 'trail_budget',
    }

    def add_arguments(self, parser):
        parser.add_argument('input',
                type=str,
                help='Temporal graph to solve')
        parser.add_argument('--problem',
                required=True,
                choices=ProblemVariant.KINDS,
                help='Which Eulerian problem to decide')
        parser.add_argument('--method',
                choices=['auto', 'poly', 'exact'],
                default='auto',
                help='Solver family (default: auto)')
        parser.add_argument('--strict',
                action='store_true',
                help='Require strictly increasing times')
        parser.add_argument('--start',
                type=str,
                help='Pin the start vertex (id or name); exact solvers only')
        parser.add_argument('--budget',
                type=int,
                help='Override the exact solver budget')
        parser.add_argument('--node-limit',
                type=int,
                dest='node_limit',
                help='Override the search node limit (0 disables it)')
        parser.add_argument('--threads',
                type=int,
                help='Worker threads for the solver')
        parser.add_argument('--witness',
                type=str,
                help='Write the witness to this .wit file')
        parser.add_argument('--json',
                action='store_true',
                help='Print one JSON result document instead of text')

    def choose_method(self, graph, variant, method, start):
        """
        Returns ``poly`` or ``exact``.  Polynomial solvers exist for
        Eulerian walks in general and for walks and trails on
        dynamic-based graphs, in non-decreasing mode only.
        """
        dynamic = graph.is_dynamic_based() and variant.kind in self.dynamic_kinds
        poly_ok = not variant.strict and start is None and (dynamic or variant.kind == ProblemVariant.WALK)
        if method == 'poly':
            if not poly_ok:
                raise App.UsageError('No polynomial solver for %s on this graph%s' % (
                    variant, ' with a pinned start' if start is not None else ''))
            return 'poly'
        if method == 'exact':
            return 'exact'
        if poly_ok:
            if dynamic:
                return 'poly'
            if len(graph.nonempty_times()) <= App.pref('poly_tau_limit'):
                return 'poly'
        return 'exact'

    def solve_poly(self, graph, variant, threads, retlines):
        """
        Returns ``(solver name, status, witness, stats)``.
        """
        if graph.is_dynamic_based() and variant.kind in self.dynamic_kinds:
            if variant.family == ProblemVariant.FAMILY_WALK:
                solver = 'dynamic-walk'
                witness = poly.solve_dynamic_walk(graph, retlines=retlines)
            else:
                solver = 'dynamic-trail'
                witness = poly.solve_dynamic_trail(graph, variant.closed, retlines=retlines)
        else:
            solver = 'component-chain'
            chain = poly.solve_walk_fixed_tau(graph, threads=threads, retlines=retlines)
            witness = None
            if chain is not None:
                witness = poly.chain_to_walk(graph, chain)
        status = SolveResult.FEASIBLE if witness is not None else SolveResult.INFEASIBLE
        return (solver, status, witness, {})

    def solve_exact(self, graph, variant, start, options, threads, retlines):
        budget = self.option_or_pref(options, 'budget', self.budget_prefs[variant.family])
        node_limit = self.option_or_pref(options, 'node_limit', 'node_limit')
        kwargs = {
            'closed': variant.closed,
            'strict': variant.strict,
            'start': start,
            'budget': budget,
            'node_limit': node_limit,
            'threads': threads,
            'retlines': retlines,
        }
        if variant.family == ProblemVariant.FAMILY_WALK:
            result = solve_walk_exact(graph, **kwargs)
        elif variant.family == ProblemVariant.FAMILY_LOCAL:
            result = solve_local_trail_exact(graph, **kwargs)
        else:
            result = solve_trail_exact(graph, **kwargs)
        return ('exact', result.status, result.witness, result.stats)

    def run(self, **options):
        graph = self.load(formats.parse_tg, options['input'])
        ordering = ProblemVariant.STRICT if options['strict'] else ProblemVariant.NONDECREASING
        variant = ProblemVariant(options['problem'], ordering)
        threads = self.option_or_pref(options, 'threads', 'threads')
        start = None
        if options['start'] is not None:
            start = graph.vertex_by_name(options['start'])

        retlines = []
        began = time.monotonic()
        method = self.choose_method(graph, variant, options['method'], start)
        App.log(retlines, App.STATUS_DEBUG, 'Solving %s on %r with the %s method' % (variant, graph, method))
        if method == 'poly':
            (solver, status, witness, stats) = self.solve_poly(graph, variant, threads, retlines)
        else:
            (solver, status, witness, stats) = self.solve_exact(graph, variant, start, options,
                threads, retlines)
        stats = dict(stats)
        stats['seconds'] = round(time.monotonic() - began, 6)

        if status == SolveResult.FEASIBLE:
            violations = verify(graph, witness, variant)
            if violations:    # pragma: no cover
                self.fail('Solver witness failed verification: %s' % (
                    ', '.join(str(v) for v in violations)), App.EXIT_SOFTWARE)
            App.log(retlines, App.STATUS_SUCCESS, 'feasible: %s witness with %d steps (%s)' % (
                variant, len(witness), solver))
            if options['witness']:
                self.write_file(options['witness'], formats.serialize_wit(variant, witness))
        elif status == SolveResult.INFEASIBLE:
            App.log(retlines, App.STATUS_INFO, 'infeasible: no Eulerian %s (%s)' % (variant, solver))
        else:
            App.log(retlines, App.STATUS_ERROR, 'budget exceeded (%s)' % (solver))

        if self.json_output:
            self.emit_json('solve', {
                'problem': str(variant),
                'method': solver,
                'status': status,
                'stats': stats,
                'witness': self.walk_document(witness),
            })
        else:
            self.report(retlines)

        if status == SolveResult.INFEASIBLE:
            self.fail('infeasible', App.EXIT_INFEASIBLE)
        elif status == SolveResult.BUDGET_EXCEEDED:
            self.fail('budget exceeded', App.EXIT_BUDGET)
