"""Verification app."""

# Django
from django.apps import AppConfig


class VerificationAppConfig(AppConfig):
    """Verification suites app config."""
    name = 'api.verification'
    verbose_name = 'Verification suites'
