#!/usr/bin/env python
# vim: set expandtab tabstop=4 shiftwidth=4:

from tempeuler.management.base import TempEulerCommand
from tempeuler.models import App, ProblemVariant
from tempeuler.verify import verify, check_odd_coverage
from tempeuler import formats

class Command(TempEulerCommand):

    # Help text
    help = 'Checks a witness (.wit) against a temporal graph (.tg)'

    def add_arguments(self, parser):
        parser.add_argument('input',
                type=str,
                help='Temporal graph')
        parser.add_argument('witness',
                type=str,
                help='Witness to check')
        parser.add_argument('--problem',
                choices=ProblemVariant.KINDS,
                help='Problem to check against (default: the one named in the witness)')
        parser.add_argument('--strict',
                action='store_true',
                help='Require strictly increasing times')
        parser.add_argument('--odd-coverage',
                action='store_true',
                dest='odd_coverage',
                help='Also check that both timestamps visit every odd vertex (lifetime 2)')
        parser.add_argument('--json',
                action='store_true',
                help='Print one JSON result document instead of text')

    def run(self, **options):
        graph = self.load(formats.parse_tg, options['input'])
        (variant, walk) = self.load(formats.parse_wit, options['witness'])
        if options['problem'] is not None or options['strict']:
            kind = options['problem'] or variant.kind
            ordering = ProblemVariant.STRICT if options['strict'] else variant.ordering
            variant = ProblemVariant(kind, ordering)

        violations = verify(graph, walk, variant)
        missing = {}
        if options['odd_coverage'] and not violations:
            missing = check_odd_coverage(graph, walk)

        retlines = []
        if violations:
            for violation in violations:
                App.log(retlines, App.STATUS_ERROR, str(violation))
        for (stamp, vertices) in sorted(missing.items()):
            App.log(retlines, App.STATUS_ERROR, 'time %d misses odd vertices %s' % (
                stamp, ', '.join(graph.name(v) for v in sorted(vertices))))
        if not violations and not missing:
            App.log(retlines, App.STATUS_SUCCESS, 'ok: valid Eulerian %s' % (variant))

        if self.json_output:
            self.emit_json('verify', {
                'problem': str(variant),
                'status': 'ok' if not violations and not missing else 'rejected',
                'violations': [{'code': v.code, 'location': v.location} for v in violations],
                'odd_missing': dict((str(t), sorted(vs)) for (t, vs) in missing.items()),
            })
        else:
            self.report(retlines)

        if violations or missing:
            self.fail('witness rejected', App.EXIT_INFEASIBLE)
