from django.apps import AppConfig


class BMWConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.bmw'
    label = 'bmw'
