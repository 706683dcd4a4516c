"""Exact analysis of Wolf groups: certificates, orbit geometry, butterflies
and orbit-bundle trivializations. Instances are file paths or catalog names;
reports come back as parsed JSON."""

import json

from . import _wolfkit
from ._wolfkit import beta, catalog_names, inertia

__all__ = ["analyze", "beta", "catalog_emit", "catalog_names", "check", "inertia", "trivialize"]


def _run(fn, instance, seed):
    code, text = fn(instance, seed)
    return code, json.loads(text)


def check(instance, seed=0):
    """Returns (exit_code, report)."""
    return _run(_wolfkit.check, instance, seed)


def analyze(instance, seed=0):
    """Returns (exit_code, report)."""
    return _run(_wolfkit.analyze, instance, seed)


def trivialize(instance, seed=0):
    """Returns (exit_code, result); result holds pi, sigma and history."""
    return _run(_wolfkit.trivialize, instance, seed)


def catalog_emit(name):
    return json.loads(_wolfkit.catalog_emit(name))
