from django.apps import AppConfig


class RMatrixConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.rmatrix'
    label = 'rmatrix'
