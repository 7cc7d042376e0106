"""Coxeter app."""

# Django
from django.apps import AppConfig


class CoxeterAppConfig(AppConfig):
    """Coxeter app config."""
    name = 'api.coxeter'
    verbose_name = 'Finite Coxeter systems'
