from django.apps import AppConfig


class ScalarConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.scalar'
    label = 'scalar'
