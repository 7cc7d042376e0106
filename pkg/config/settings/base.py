"""
Django settings for the catkit project.

catkit is run through management commands only: there are no database
tables and no HTTP surface, so the web parts of a stock settings module
are left out.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/4.2/ref/settings/
"""

import os

import environ
env = environ.Env()
# Build paths inside the project like this: os.path.join(BASE_DIR, ...)
BASE_DIR = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))


# No secrets are handled, the key only satisfies Django's startup checks.
SECRET_KEY = env("DJANGO_SECRET_KEY", default="catkit-local")

DEBUG = env.bool("DEBUG", default=False)

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    "django.contrib.contenttypes",
    # LOCAL_APPS
    "api.utils.apps.UtilsAppConfig",
    "api.perms.apps.PermsAppConfig",
    "api.boolmat.apps.BoolmatAppConfig",
    "api.hecke.apps.HeckeAppConfig",
    "api.coxeter.apps.CoxeterAppConfig",
    "api.dcm.apps.DcmAppConfig",
    "api.dyck.apps.DyckAppConfig",
    "api.repmin.apps.RepminAppConfig",
    "api.verification.apps.VerificationAppConfig",
    # THIRD_PARTY_APPS
    "rest_framework",
]

# Every result is computed, nothing is stored.
DATABASES = {}

USE_TZ = True
TIME_ZONE = "UTC"


# REST FRAMEWORK
# Serializers and the JSON renderer are used to shape reports.
REST_FRAMEWORK = {
    "DEFAULT_RENDERER_CLASSES": [
        "rest_framework.renderers.JSONRenderer",
    ],
    "UNAUTHENTICATED_USER": None,
}


# Catkit
# Element cap of the closure engine and of Coxeter group tables.
CATKIT_CAP = env.int("CATKIT_CAP", default=10000)
# Memory guard on the normal forms enumerated by the presentation check.
CATKIT_WORD_CAP = env.int("CATKIT_WORD_CAP", default=2 ** 26)
# Rule count at which Knuth-Bendix completion gives up.
CATKIT_RULE_CAP = env.int("CATKIT_RULE_CAP", default=20000)
# Largest degree for double Catalan closures and exhaustive fiber scans.
CATKIT_DC_MAX_N = env.int("CATKIT_DC_MAX_N", default=8)
# Element cap of the double Catalan closure (DC_8 has 15767 elements).
CATKIT_DC_CAP = env.int("CATKIT_DC_CAP", default=20000)
# Largest degree for the presentation check unless forced.
CATKIT_PRESENTATION_MAX_N = env.int("CATKIT_PRESENTATION_MAX_N", default=5)
CATKIT_SEED = env.int("CATKIT_SEED", default=0)
CATKIT_RANDOM_SAMPLES = env.int("CATKIT_RANDOM_SAMPLES", default=10000)
CATKIT_JOBS = env.int("CATKIT_JOBS", default=1)


# Logging
# Reports are written to stdout, so every handler writes to stderr.
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "%(levelname)s %(asctime)s %(module)s " "%(process)d %(thread)d %(message)s"
        },
    },
    "handlers": {
        "console": {
            "level": "DEBUG",
            "class": "logging.StreamHandler",
            "formatter": "verbose",
        },
    },
    "loggers": {
        "api": {
            "handlers": ["console"],
            "level": env("CATKIT_LOG_LEVEL", default="INFO"),
            "propagate": False,
        },
    },
}
