"""
Django settings for the qcount project.

The project has no web surface: Django provides settings, logging and the
management-command runner for the counting engine.
"""
import os

from pathlib import Path
from dotenv import load_dotenv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Load environment variables from .env file
load_dotenv(BASE_DIR / '.env')


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.environ.get('DJANGO_SECRET_KEY', 'django-insecure-qcount-local-only')

DEBUG = os.environ.get('DJANGO_DEBUG', 'false').lower() == 'true'

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'rest_framework',
    'qcount',
]


# Database
# Nothing is persisted; the engine is pure computation. Django still expects a default alias.

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': ':memory:',
    }
}


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True


# Logging

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'qcount': {
            'handlers': ['console'],
            'level': os.environ.get('QCOUNT_LOG_LEVEL', 'INFO'),
            'propagate': False,
        },
    },
}


# Engine limits

# Largest n for which partitions of n are enumerated
QCOUNT_PARTITION_CAP = int(os.environ.get('QCOUNT_PARTITION_CAP', '12'))

# Largest degree of a symmetric function
QCOUNT_DEGREE_CAP = int(os.environ.get('QCOUNT_DEGREE_CAP', '12'))

# Largest number of subspaces (or vector tuples) the finite-field oracle may enumerate
QCOUNT_ENUMERATION_BUDGET = int(os.environ.get('QCOUNT_ENUMERATION_BUDGET', '1000000'))

# Primes used by `manage.py verify` when --primes is not given
QCOUNT_DEFAULT_PRIMES = os.environ.get('QCOUNT_DEFAULT_PRIMES', '2,3')
