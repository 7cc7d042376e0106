"""Boolmat app."""

# Django
from django.apps import AppConfig


class BoolmatAppConfig(AppConfig):
    """Boolmat app config."""
    name = 'api.boolmat'
    verbose_name = 'Boolean matrices'
