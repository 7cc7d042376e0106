"""Utils app."""

# Django
from django.apps import AppConfig


class UtilsAppConfig(AppConfig):
    """Utils app config.

    Holds the shared plumbing and every management command.
    """
    name = 'api.utils'
    verbose_name = 'Utils'
