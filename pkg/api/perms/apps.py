"""Perms app."""

# Django
from django.apps import AppConfig


class PermsAppConfig(AppConfig):
    """Perms app config."""
    name = 'api.perms'
    verbose_name = 'Permutations'
