from django.apps import AppConfig


class RecognitionConfig(AppConfig):
    name = 'recognition'
    verbose_name = 'Edge-colored permutation graph recognition'
