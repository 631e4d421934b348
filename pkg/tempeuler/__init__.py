default_app_config = 'tempeuler.apps.TempEulerConfig'

__version__ = '0.9.0'
