"""Exact calculus, constructions and oracles for powers of Hamilton cycles."""

import json
from fractions import Fraction

from . import _hampower
from ._hampower import (
    DomainError,
    InternalError,
    ResourceError,
    braid_edges,
    clique_count,
    gnp_edges,
    segment_far_minimum,
    table,
)

__all__ = [
    "DomainError",
    "InternalError",
    "ResourceError",
    "braid_edges",
    "clique_count",
    "f_value",
    "gnp_edges",
    "max_density",
    "min_partition",
    "params",
    "pell",
    "rewire",
    "segment_far_minimum",
    "slope",
    "table",
]

_RATIONAL_KEYS = {"f_floor", "f_ceil", "f_ell", "f_ell_star", "exponent", "reciprocal_exponent",
                  "slope", "intercept", "rhs", "offset"}


def _fractions(value):
    if isinstance(value, dict):
        return {k: (Fraction(v) if k in _RATIONAL_KEYS and isinstance(v, str) else _fractions(v))
                for k, v in value.items()}
    if isinstance(value, list):
        return [_fractions(v) for v in value]
    return value


def f_value(k, m, x):
    return Fraction(_hampower.f_value(k, m, str(Fraction(x))))


def params(k, m):
    return _fractions(json.loads(_hampower.params_json(k, m)))


def pell(k, count=1):
    return [{key: int(v) for key, v in row.items()} for row in json.loads(_hampower.pell_json(k, count))]


def slope(k, m, s):
    out = _fractions(json.loads(_hampower.slope_json(k, m, s)))
    for key in ("multipliers", "far_densities"):
        out[key] = [Fraction(v) for v in out.get(key, [])]
    return out


def min_partition(L, m, k):
    return json.loads(_hampower.min_partition_json(L, m, k))


def max_density(n, edges):
    return Fraction(_hampower.max_density(n, list(edges)))


def rewire(m, order, v0_positions):
    return json.loads(_hampower.rewire_json(m, list(order), list(v0_positions)))
