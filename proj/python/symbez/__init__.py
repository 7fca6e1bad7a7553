"""Orbit types of symmetric intersections in P2 and P3."""

import json as _json

from ._core import (
    CapExceededError,
    CommonFactorError,
    NotClosedError,
    NumericalError,
    ParseError,
    expand,
    expected_orbit_type_p2,
    fixed_points,
    p3_degree_congruence,
    random_instance,
    verify_catalog,
)
from . import _core

__all__ = [
    "CapExceededError",
    "CommonFactorError",
    "NotClosedError",
    "NumericalError",
    "ParseError",
    "expand",
    "expected_orbit_type_p2",
    "fixed_points",
    "independence",
    "p3_degree_congruence",
    "random_instance",
    "solve",
    "verify_catalog",
    "verify_p2_table",
    "verify_p3",
]


def solve(f, g, h=None, *, basis="monomial", precision=128, seed=0, tolerance=1e-8, max_product=24):
    """Solve f = g = 0 in P2, or f = g = h = 0 in P3. Returns the report as a dict."""
    polys = [f, g] if h is None else [f, g, h]
    return _json.loads(_core.solve_json(polys, basis, precision, seed, tolerance, max_product))


def verify_p2_table(d, e, trials=10, seed=0, precision=128):
    return _json.loads(_core.verify_p2_table_json(d, e, trials, seed, precision))


def verify_p3(d1, d2, d3, trials=5, seed=0, precision=128):
    return _json.loads(_core.verify_p3_json(d1, d2, d3, trials, seed, precision))


def independence(space, degrees, trials=10, seed=0, precision=128):
    return _json.loads(_core.independence_json(space, list(degrees), trials, seed, precision))
