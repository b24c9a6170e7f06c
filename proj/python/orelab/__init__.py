"""Left Ore sets, localizations and maximal left denominator sets of finite rings."""

import json

from ._orelab import (
    AxiomViolation,
    BadSpec,
    Error,
    InternalInconsistency,
    NotDenominator,
    NotOre,
    ParseError,
    Ring,
    SizeGuardExceeded,
    ZeroAbsorbed,
    batch_summary,
    construct,
    default_catalog,
    from_text,
    theorem_ids,
    verify,
)
from . import _orelab

__all__ = [
    "AxiomViolation", "BadSpec", "Error", "InternalInconsistency", "NotDenominator", "NotOre",
    "ParseError", "Ring", "SizeGuardExceeded", "ZeroAbsorbed",
    "batch_summary", "construct", "default_catalog", "from_text", "theorem_ids", "verify",
    "info", "ore", "localize", "profile",
]


def _ring(target):
    return construct(target) if isinstance(target, str) else target


def info(target, guard_order=0):
    """Order, units, ideals, minimal primes and uniform dimension."""
    return json.loads(_orelab.info_json(_ring(target), guard_order))


def ore(target, elements):
    """Ore report for the multiplicative set generated by `elements`."""
    return json.loads(_orelab.ore_json(_ring(target), list(elements)))


def localize(target, elements):
    """Summary of S^-1 R for the set generated by `elements`."""
    return json.loads(_orelab.localize_json(_ring(target), list(elements)))


def profile(target, sided=False, guard_order=0, guard_bruteforce=0):
    """The localization profile as a dict."""
    return json.loads(_orelab.profile_json(_ring(target), sided, guard_order, guard_bruteforce))
