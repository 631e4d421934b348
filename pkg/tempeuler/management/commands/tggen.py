#!/usr/bin/env python
# vim: set expandtab tabstop=4 shiftwidth=4:

from tempeuler.management.base import TempEulerCommand
from tempeuler.models import App
from tempeuler import formats

class Command(TempEulerCommand):

    # Help text
    help = 'Writes a seeded random temporal graph (.tg)'

    def add_arguments(self, parser):
        parser.add_argument('output',
                type=str,
                nargs='?',
                default='-',
                help='Where to write the graph (default: stdout)')
        parser.add_argument('--n',
                type=int,
                required=True,
                help='Vertex count')
        parser.add_argument('--m',
                type=int,
                required=True,
                help='Edge count')
        parser.add_argument('--tau',
                type=int,
                required=True,
                help='Lifetime')
        parser.add_argument('--density',
                type=float,
                default=0.5,
                help='Chance of each timestamp being active on an edge (default: 0.5)')
        parser.add_argument('--seed',
                type=int,
                default=0,
                help='Random seed (default: 0)')

    def run(self, **options):
        graph = formats.gen_random(options['n'], options['m'], options['tau'],
            density=options['density'], seed=options['seed'])
        self.write_file(options['output'], formats.serialize_tg(graph))
        if options['output'] != '-':
            self.report([(App.STATUS_SUCCESS, 'Wrote %s' % (options['output']))])
