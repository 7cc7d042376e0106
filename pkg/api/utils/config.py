"""Settings accessors.

Library code may run without a configured Django process (for example
inside a worker of the verification pool), so every accessor falls back
to the defaults of ``config.settings.base``.
"""

# Django
from django.conf import settings
from django.core.exceptions import ImproperlyConfigured


DEFAULTS = {
    "CATKIT_CAP": 10000,
    "CATKIT_WORD_CAP": 2 ** 26,
    "CATKIT_RULE_CAP": 20000,
    "CATKIT_DC_MAX_N": 8,
    "CATKIT_DC_CAP": 20000,
    "CATKIT_PRESENTATION_MAX_N": 5,
    "CATKIT_SEED": 0,
    "CATKIT_RANDOM_SAMPLES": 10000,
    "CATKIT_JOBS": 1,
}


def get_setting(name):
    try:
        return getattr(settings, name, DEFAULTS[name])
    except ImproperlyConfigured:
        return DEFAULTS[name]


def element_cap():
    return get_setting("CATKIT_CAP")


def word_cap():
    return get_setting("CATKIT_WORD_CAP")


def rule_cap():
    return get_setting("CATKIT_RULE_CAP")


def dc_max_n():
    return get_setting("CATKIT_DC_MAX_N")


def dc_element_cap():
    return get_setting("CATKIT_DC_CAP")


def presentation_max_n():
    return get_setting("CATKIT_PRESENTATION_MAX_N")


def default_seed():
    return get_setting("CATKIT_SEED")


def random_samples():
    return get_setting("CATKIT_RANDOM_SAMPLES")


def default_jobs():
    return get_setting("CATKIT_JOBS")
