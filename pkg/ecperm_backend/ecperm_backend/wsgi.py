"""WSGI entry point serving the recognition API."""
import os

from django.core.wsgi import get_wsgi_application

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'ecperm_backend.settings')

application = get_wsgi_application()
