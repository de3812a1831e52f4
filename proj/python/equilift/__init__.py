"""Python face of the finite-scale cohomology engine.

The heavy lifting lives in the compiled ``_core`` module; this wrapper turns
its JSON-string reports into plain dictionaries.
"""

import json as _json

from ._core import (  # noqa: F401
    Instance,
    InputError,
    UnsupportedError,
    dumps,
    group_names,
    group_order,
    load,
    loads,
)
from . import _core


def check_site(instance):
    """Validate the covering topology of an instance's site block and, when a
    presheaf is present, test its sheaf condition."""
    return _json.loads(_core.check_site(instance))


def classify(instance, degree=1, workers=1):
    """Classify cocycles on the classify block's nerve up to gauge."""
    return _json.loads(_core.classify(instance, degree, workers))


def lift(instance, workers=1):
    """Full lifting analysis of the lift block."""
    return _json.loads(_core.lift(instance, workers))


def homogeneous(instance):
    """Build and realize the homogeneous block's coset-quotient bundle."""
    return _json.loads(_core.homogeneous(instance))


def clutch(instance, workers=1):
    """Glue the clutch block's two-chart bundle and report the verdicts."""
    return _json.loads(_core.clutch(instance, workers))


__all__ = [
    "Instance",
    "InputError",
    "UnsupportedError",
    "check_site",
    "classify",
    "clutch",
    "dumps",
    "group_names",
    "group_order",
    "homogeneous",
    "lift",
    "load",
    "loads",
]
