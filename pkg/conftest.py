import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "ecperm_backend.settings")
django.setup()
