"""Hecke app."""

# Django
from django.apps import AppConfig


class HeckeAppConfig(AppConfig):
    """Hecke app config."""
    name = 'api.hecke'
    verbose_name = '0-Hecke monoids'
