#!/usr/bin/env python
# vim: set expandtab tabstop=4 shiftwidth=4:

import os

from tempeuler.management.base import TempEulerCommand
from tempeuler.models import App, ProblemVariant
from tempeuler import formats, reductions

class Command(TempEulerCommand):

    # Help text
    help = 'Builds a hardness construction from a DIMACS CNF formula'

    constructions = [
        reductions.KIND_3SAT_WALK,
        reductions.KIND_NAE_LOCALTOUR,
        reductions.KIND_NAE_LOCALTRAIL,
        reductions.KIND_NAE_TRAIL,
        reductions.KIND_TWO_TRAIL_COVER,
    ]

    def add_arguments(self, parser):
        parser.add_argument('input',
                type=str,
                help='DIMACS CNF formula')
        parser.add_argument('output',
                type=str,
                help='Where to write the temporal graph (.tg)')
        parser.add_argument('--construction',
                required=True,
                choices=self.constructions,
                help='Which construction to build')
        parser.add_argument('--tau',
                type=int,
                help='Lifetime for the local trail lift and the trail construction')
        parser.add_argument('--pin',
                type=str,
                help='Vertex (name or id) the local trail lift attaches its star to')
        parser.add_argument('--closed',
                action='store_true',
                help='Build the tour variant')
        parser.add_argument('--forest',
                action='store_true',
                help='Forest snapshots for the walk construction')
        parser.add_argument('--names',
                type=str,
                help='Names side table to write (default: next to the output)')
        parser.add_argument('--witness',
                type=str,
                help='Also write the witness built from a brute-force assignment')

    def build(self, formula, options):
        """
        Returns ``(artifact, witness builder, variant, brute force)``.
        The builder takes an assignment, which the brute force search
        finds; the cover construction has no single-file witness.
        """
        construction = options['construction']
        if construction == reductions.KIND_3SAT_WALK:
            art = reductions.reduce_3sat_to_walk(formula, forest=options['forest'])
            return (art, lambda a: reductions.walk_witness_from_assignment(art, a),
                ProblemVariant(ProblemVariant.WALK), reductions.brute_force_sat)
        if construction == reductions.KIND_NAE_LOCALTOUR:
            art = reductions.reduce_nae3sat_to_localtour(formula)
            return (art, lambda a: reductions.localtour_witness_from_nae(art, a),
                ProblemVariant(ProblemVariant.LOCAL_TOUR), reductions.brute_force_nae)
        if construction == reductions.KIND_NAE_LOCALTRAIL:
            if options['tau'] is None or options['pin'] is None:
                raise App.UsageError('The local trail lift needs --tau and --pin')
            base = reductions.reduce_nae3sat_to_localtour(formula)
            art = reductions.lift_localtour_to_localtrail(base, options['pin'], options['tau'],
                closed=options['closed'])
            def witness(assignment):
                if art.pin != base.special['s_1']:
                    raise App.UsageError('Lifted witnesses are only built for --pin s_1')
                tour = reductions.localtour_witness_from_nae(base, assignment)
                return reductions.localtrail_witness_from_localtour(art, tour)
            kind = ProblemVariant.LOCAL_TOUR if options['closed'] else ProblemVariant.LOCAL_TRAIL
            return (art, witness, ProblemVariant(kind), reductions.brute_force_nae)
        if construction == reductions.KIND_NAE_TRAIL:
            tau = options['tau'] if options['tau'] is not None else 2
            art = reductions.reduce_nae3sat_to_trail(formula, tau, closed=options['closed'])
            kind = ProblemVariant.TOUR if options['closed'] else ProblemVariant.TRAIL
            return (art, lambda a: reductions.trail_witness_from_nae(art, a),
                ProblemVariant(kind), reductions.brute_force_nae)
        art = reductions.reduce_to_two_trail_cover(formula)
        return (art, None, None, reductions.brute_force_nae)

    def run(self, **options):
        formula = self.load(formats.parse_dimacs, options['input'])
        (art, witness, variant, brute_force) = self.build(formula, options)
        if options['witness'] and witness is None:
            raise App.UsageError('No single witness file for the %s construction' % (art.kind))

        retlines = []
        self.write_file(options['output'], formats.serialize_tg(art.graph))
        App.log(retlines, App.STATUS_SUCCESS, 'Wrote %s: %d vertices, %d edges, lifetime %d' % (
            options['output'], art.graph.vertex_count, art.graph.edge_count, art.graph.lifetime))

        names = options['names']
        if names is None and options['output'] != '-':
            names = '%s.names.jsonl' % (os.path.splitext(options['output'])[0])
        if names is not None:
            self.write_file(names, formats.serialize_names(art.graph.names, art.kind))
            App.log(retlines, App.STATUS_DEBUG, 'Wrote names to %s' % (names))

        missing = False
        if options['witness']:
            assignment = brute_force(formula)
            if assignment is None:
                App.log(retlines, App.STATUS_INFO, 'Formula has no suitable assignment, no witness written')
                missing = True
            else:
                walk = witness(assignment)
                self.write_file(options['witness'], formats.serialize_wit(variant, walk))
                App.log(retlines, App.STATUS_SUCCESS, 'Wrote %s witness with %d steps to %s' % (
                    variant, len(walk), options['witness']))

        if options['output'] != '-':
            self.report(retlines)
        if missing:
            self.fail('no witness', App.EXIT_INFEASIBLE)
