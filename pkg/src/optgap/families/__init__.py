"""The six optimization families, registered by name."""

from .base import Family, GapNote, Instance, family_names, get_family
from . import lp, portfolio, channel, nn, wasserstein, sivp  # noqa: F401  (registration)
from .gaps import gap_kappa, gap_report

__all__ = [
    "Family",
    "GapNote",
    "Instance",
    "family_names",
    "get_family",
    "gap_kappa",
    "gap_report",
]
