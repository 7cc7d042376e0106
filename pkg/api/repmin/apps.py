"""Repmin app."""

# Django
from django.apps import AppConfig


class RepminAppConfig(AppConfig):
    """Minimal representation app config."""
    name = 'api.repmin'
    verbose_name = 'Minimal effective representations'
