#!/usr/bin/env python
# vim: set expandtab tabstop=4 shiftwidth=4:

from tempeuler.management.base import TempEulerCommand
from tempeuler.models import App
from tempeuler import formats, reductions

class Command(TempEulerCommand):

    # Help text
    help = 'Writes one of the built-in fixture instances'

    def add_arguments(self, parser):
        parser.add_argument('kind',
                choices=['hexring', 'fourclause'],
                help='hexring: ring of K hexagons; fourclause: the walk construction on the four-clause formula')
        parser.add_argument('k',
                type=int,
                nargs='?',
                help='Number of hexagons (hexring only)')
        parser.add_argument('--tau',
                type=int,
                default=2,
                help='Lifetime of the hexagon ring (default: 2)')
        parser.add_argument('--output',
                type=str,
                default='-',
                help='Where to write the graph (default: stdout)')

    def run(self, **options):
        if options['kind'] == 'hexring':
            if options['k'] is None:
                raise App.UsageError('hexring needs the number of hexagons')
            graph = reductions.hexagon_ring(options['k'], tau=options['tau'])
        else:
            if options['k'] is not None:
                raise App.UsageError('fourclause takes no size argument')
            graph = reductions.reduce_3sat_to_walk(reductions.four_clause_formula()).graph
        self.write_file(options['output'], formats.serialize_tg(graph))
        if options['output'] != '-':
            self.report([(App.STATUS_SUCCESS, 'Wrote %s (%d vertices, %d edges)' % (
                options['output'], graph.vertex_count, graph.edge_count))])
