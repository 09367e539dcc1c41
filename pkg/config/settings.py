"""
Django settings for the R matrix toolkit.

The project has no database, URL routing or web entry point; Django
provides settings, app loading, management commands and the test runner.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/4.2/ref/settings/
"""

from pathlib import Path
import environ
import os

# Initialize environ
env = environ.Env(
    DEBUG=(bool, False),
    LOG_LEVEL=(str, 'INFO'),
    RMATRIX_DEFAULT_TOL=(float, 1e-9),
    RMATRIX_DEFAULT_Q=(list, ['0.7', '1.3']),
)

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Read .env file
environ.Env.read_env(os.path.join(BASE_DIR, '.env'))

# Only used by Django internals; nothing is signed or served.
SECRET_KEY = env('SECRET_KEY', default='rmatrix-local-only')

DEBUG = env('DEBUG')

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    # Third-party apps
    'rest_framework',

    # Local apps
    'apps.core',
    'apps.scalar',
    'apps.tensor',
    'apps.hecke',
    'apps.coupling',
    'apps.rmatrix',
    'apps.bmw',
    'apps.cli',
]

# No database: every computation is in memory.
DATABASES = {}


# Internationalization
# https://docs.djangoproject.com/en/4.2/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# R matrix configuration

RMATRIX_GOLDEN_PATH = env('RMATRIX_GOLDEN_PATH', default=str(BASE_DIR / 'apps' / 'rmatrix' / 'data' / 'golden.txt'))
RMATRIX_DEFAULT_TOL = env('RMATRIX_DEFAULT_TOL')
RMATRIX_DEFAULT_Q = [float(value) for value in env('RMATRIX_DEFAULT_Q')]
RMATRIX_OUTPUT_DIR = env('RMATRIX_OUTPUT_DIR', default='.')


# Logging

LOG_LEVEL = env('LOG_LEVEL')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {name} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'apps': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
    },
}
