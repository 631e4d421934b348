#!/usr/bin/env python
# vim: set expandtab tabstop=4 shiftwidth=4:

# Minimal standalone project so that the tempeuler commands and its
# test-suite can run without a host site.  Sites which install the app
# themselves only need 'dynamic_preferences' and 'tempeuler' in their
# INSTALLED_APPS.

import os

BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

SECRET_KEY = os.environ.get('TEMPEULER_SECRET_KEY', 'tempeuler-standalone-not-secret')

DEBUG = False

ALLOWED_HOSTS = []

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',
    'dynamic_preferences',
    'tempeuler',
]

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': os.environ.get('TEMPEULER_DB', os.path.join(BASE_DIR, 'tempeuler.sqlite3')),
    }
}

DEFAULT_AUTO_FIELD = 'django.db.models.AutoField'

# Preferences are read straight from the database; tests roll their
# changes back and a cached value would outlive the rollback.
DYNAMIC_PREFERENCES = {
    'ENABLE_CACHE': False,
}

USE_TZ = True

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': 'WARNING',
    },
}
