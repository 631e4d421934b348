#!/usr/bin/env python
# vim: set expandtab tabstop=4 shiftwidth=4:

import sys
import json

from django.core.management.base import BaseCommand, CommandError, CommandParser

from tempeuler.models import App

class TempEulerParser(CommandParser):
    """
    Argument parser whose errors exit with our usage code (64) instead
    of argparse's 2.
    """

    def error(self, message):
        if self.called_from_command_line:
            self.print_usage(sys.stderr)
            self.exit(App.EXIT_USAGE, '%s: error: %s\n' % (self.prog, message))
        raise CommandError('Error: %s' % (message), returncode=App.EXIT_USAGE)


class TempEulerCommand(BaseCommand):
    """
    Shared plumbing for our management commands: exit codes, file
    handling, status line output and JSON documents.  Subclasses
    implement ``run(**options)`` instead of ``handle``.
    """

    json_version = 1

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super(TempEulerCommand, self).create_parser(prog_name, subcommand, **kwargs)
        parser.__class__ = TempEulerParser
        return parser

    def handle(self, *args, **options):
        self.verbosity = options.get('verbosity', 1)
        self.json_output = options.get('json', False)
        try:
            return self.run(**options)
        except (App.UsageError, App.RangeError) as e:
            raise CommandError(str(e), returncode=App.EXIT_USAGE)
        except (App.ParseError, App.ValidationError, App.ReductionError) as e:
            raise CommandError(str(e), returncode=App.EXIT_DATA)

    def run(self, **options):    # pragma: no cover
        raise NotImplementedError()

    def fail(self, message, returncode):
        raise CommandError(message, returncode=returncode)

    def read_file(self, filename):
        try:
            with open(filename) as df:
                return df.read()
        except (IOError, OSError) as e:
            self.fail('Could not read %s: %s' % (filename, e), App.EXIT_USAGE)

    def write_file(self, filename, text):
        if filename == '-':
            self.stdout.write(text, ending='')
            return
        try:
            with open(filename, 'w') as df:
                df.write(text)
        except (IOError, OSError) as e:
            self.fail('Could not write %s: %s' % (filename, e), App.EXIT_USAGE)

    def load(self, parse, filename):
        """
        Reads ``filename`` and hands its contents to one of the parsers
        in ``tempeuler.formats``.
        """
        text = self.read_file(filename)
        try:
            return parse(text)
        except App.ParseError as e:
            self.fail('%s: %s' % (filename, e), App.EXIT_DATA)

    def option_or_pref(self, options, key, pref):
        if options.get(key) is not None:
            return options[key]
        return App.pref(pref)

    def report(self, retlines):
        """
        Writes out a list of ``(status, text)`` lines.  Debug lines only
        show up at verbosity 2 and above; nothing is printed in JSON mode.
        """
        if self.json_output or self.verbosity < 1:
            return
        for (status, line) in retlines:
            if status == App.STATUS_DEBUG:
                if self.verbosity >= 2:
                    self.stdout.write(line)
            elif status == App.STATUS_ERROR:
                self.stderr.write(self.style.ERROR(line))
            elif status == App.STATUS_SUCCESS:
                self.stdout.write(self.style.SUCCESS(line))
            else:
                self.stdout.write(line)

    def emit_json(self, command, document):
        document = dict(document)
        document['v'] = self.json_version
        document['command'] = command
        self.stdout.write(json.dumps(document, sort_keys=True))

    @staticmethod
    def walk_document(walk):
        if walk is None:
            return None
        return {
            'start': walk.start,
            'steps': [[step.u, step.v, step.time] for step in walk.steps],
        }
