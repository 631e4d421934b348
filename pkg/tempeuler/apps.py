from django.apps import AppConfig


class TempEulerConfig(AppConfig):
    name = 'tempeuler'
    verbose_name = 'Temporal Eulerian toolkit'
