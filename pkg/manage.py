#!/usr/bin/env python
# vim: set expandtab tabstop=4 shiftwidth=4:

import os
import sys

if __name__ == '__main__':
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'tempeuler_site.settings')
    from django.core.management import execute_from_command_line
    execute_from_command_line(sys.argv)
