# Lets plain pytest run the Django test-suite the way ``manage.py test``
# would: standalone settings, the test environment and a test database.

import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'tempeuler_site.settings')
django.setup()

import pytest


@pytest.fixture(scope='session', autouse=True)
def django_test_environment():
    from django.test.utils import setup_test_environment, teardown_test_environment
    from django.test.utils import setup_databases, teardown_databases
    setup_test_environment()
    old_config = setup_databases(verbosity=0, interactive=False)
    yield
    teardown_databases(old_config, verbosity=0)
    teardown_test_environment()


def pytest_collection_modifyitems(config, items):
    # ``testdata(filename)`` on the base classes is a fixture-path
    # helper, not a test, but its name matches unittest's ``test`` prefix.
    items[:] = [item for item in items if item.name != 'testdata']
