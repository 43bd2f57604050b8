from django.apps import AppConfig


class QcountConfig(AppConfig):
    name = 'qcount'
    verbose_name = 'Subspace profile counting'
