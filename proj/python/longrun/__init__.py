"""Exact and numerical evaluation of infinite utility streams.

Exact values cross the extension boundary as rational strings; this wrapper
converts them to fractions.Fraction and unpacks JSON reports into dicts.
"""

import json as _json
from fractions import Fraction

from ._longrun import (
    BoundViolation,
    EpStream,
    StreamSpecError,
    abel_identity_residual,
    add,
    axiom_ids,
    brute_compare_json,
    compare_json,
    discounted_value,
    discounted_value_exact,
    replicate_prefix,
    rule_ids,
    scale,
    search_json,
    tail,
    test_axiom_json,
)
from ._longrun import cesaro_average as _cesaro_average
from ._longrun import kstep_mean_bounds as _kstep_mean_bounds
from ._longrun import partial_mean as _partial_mean

__all__ = [
    "BoundViolation",
    "EpStream",
    "StreamSpecError",
    "abel_identity_residual",
    "add",
    "axiom_ids",
    "brute_compare",
    "cesaro_average",
    "compare",
    "discounted_value",
    "discounted_value_exact",
    "kstep_mean_bounds",
    "partial_mean",
    "replicate_prefix",
    "rule_ids",
    "scale",
    "search",
    "tail",
    "test_axiom",
]


def cesaro_average(s):
    """Exact long-run average of an eventually periodic stream."""
    return Fraction(_cesaro_average(s))


def partial_mean(s, T):
    """Exact mean of the first T values."""
    return Fraction(_partial_mean(s, T))


def kstep_mean_bounds(s, kmax=4, horizon=1 << 20):
    lo, hi = _kstep_mean_bounds(s, kmax, horizon)
    return Fraction(lo), Fraction(hi)


def compare(rule, u, v):
    """Compare two streams under a builtin rule; returns the report dict."""
    return _json.loads(compare_json(rule, u, v))


def brute_compare(u, v, criterion, horizon=2000, kmax=12):
    return _json.loads(brute_compare_json(u, v, criterion, horizon, kmax))


def test_axiom(rule, axiom, trials=200, seed=1, corpus_size=500):
    return _json.loads(test_axiom_json(rule, axiom, trials, seed, corpus_size))


def search(property_id, seed=1, budget=10000):
    return _json.loads(search_json(property_id, seed, budget))
