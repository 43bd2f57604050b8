"""
Accessors for the QCOUNT_* settings.

Read at call time so tests can override them with the `settings` fixture.
"""
from django.conf import settings


def partition_cap():
    return int(getattr(settings, "QCOUNT_PARTITION_CAP", 12))


def degree_cap():
    return int(getattr(settings, "QCOUNT_DEGREE_CAP", 12))


def enumeration_budget():
    return int(getattr(settings, "QCOUNT_ENUMERATION_BUDGET", 1_000_000))


def default_primes():
    raw = getattr(settings, "QCOUNT_DEFAULT_PRIMES", "2,3")
    return [int(p) for p in str(raw).split(",") if p.strip()]
