"""
Django settings for ecperm_backend project.

Generated by 'django-admin startproject' using Django 5.2.

For more information on this file, see
https://docs.djangoproject.com/en/5.2/topics/settings/

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

import os
from pathlib import Path

from dotenv import load_dotenv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Load environment variables from .env file
load_dotenv(BASE_DIR / '.env')


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.getenv('DJANGO_SECRET_KEY', 'django-insecure-ecperm-development-key')

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = os.getenv('DJANGO_DEBUG', 'True') == 'True'

ALLOWED_HOSTS = [host for host in os.getenv('DJANGO_ALLOWED_HOSTS', '').split(',') if host]


# Recognition

ECPERM_SEED = int(os.getenv('ECPERM_SEED', '0'))
ECPERM_JOBS = int(os.getenv('ECPERM_JOBS', '1'))
ECPERM_ORACLE_MAX_N = int(os.getenv('ECPERM_ORACLE_MAX_N', '9'))
ECPERM_ORDER_CHECK_MAX_N = int(os.getenv('ECPERM_ORDER_CHECK_MAX_N', '64'))
ECPERM_AXIOMS_MAX_N = int(os.getenv('ECPERM_AXIOMS_MAX_N', '100'))


# Application definition

INSTALLED_APPS = [
    'rest_framework',
    'recognition',
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'django.middleware.common.CommonMiddleware',
]

ROOT_URLCONF = 'ecperm_backend.urls'

WSGI_APPLICATION = 'ecperm_backend.wsgi.application'

# Inputs are files and request bodies; nothing is persisted.
DATABASES = {}

REST_FRAMEWORK = {
    'UNAUTHENTICATED_USER': None,
    'DEFAULT_AUTHENTICATION_CLASSES': [],
    'DEFAULT_PERMISSION_CLASSES': [],
}

# Large graphs are posted as JSON edge lists
DATA_UPLOAD_MAX_MEMORY_SIZE = int(os.getenv('DATA_UPLOAD_MAX_MEMORY_SIZE', str(64 * 1024 * 1024)))


# Logging: diagnostics go to stderr, stdout is reserved for JSON

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '{levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'stderr': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'recognition': {
            'handlers': ['stderr'],
            'level': os.getenv('LOG_LEVEL', 'WARNING'),
            'propagate': False,
        },
    },
}


# Internationalization
# https://docs.djangoproject.com/en/5.2/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True
