"""Dcm app."""

# Django
from django.apps import AppConfig


class DcmAppConfig(AppConfig):
    """Double Catalan monoid app config."""
    name = 'api.dcm'
    verbose_name = 'Double Catalan monoids'
