import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'stirling_lab.settings')
django.setup()


def pytest_sessionstart(session):
    from django.test.utils import setup_databases, setup_test_environment

    setup_test_environment()
    session.config._django_db = setup_databases(verbosity=0, interactive=False)


def pytest_sessionfinish(session, exitstatus):
    from django.test.utils import teardown_databases, teardown_test_environment

    old_config = getattr(session.config, '_django_db', None)
    if old_config is not None:
        teardown_databases(old_config, verbosity=0)
    teardown_test_environment()
