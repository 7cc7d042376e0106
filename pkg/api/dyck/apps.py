"""Dyck app."""

# Django
from django.apps import AppConfig


class DyckAppConfig(AppConfig):
    """Dyck app config."""
    name = 'api.dyck'
    verbose_name = 'Dyck paths'
