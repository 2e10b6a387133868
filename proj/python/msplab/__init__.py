"""Exact MSP R-matrix and Yamaguchi-Yau ring checks.

Rationals come back as fractions.Fraction, check reports as dicts.
"""

import json
from fractions import Fraction

from . import _core
from ._core import GuardFailed, InsufficientOrder, InvalidN, UnknownTarget

__all__ = [
    "GuardFailed", "InsufficientOrder", "InvalidN", "UnknownTarget",
    "target_config", "generators", "genus0_invariants", "verify_yukawa_identity",
    "pf_check", "specialized_checks", "r_tower", "delta_compare", "tail_constants",
    "level0_dual_route", "named_series", "find_polynomial", "dclosure_witnesses", "verify_zz",
    "verify_all", "run_criterion",
]


def _frac(s):
    return Fraction(s)


def target_config(k):
    return json.loads(_core.target_config(k))


def generators(k, order):
    raw = json.loads(_core.generators(k, order))
    return {name: [_frac(c) for c in coeffs] for name, coeffs in raw.items()}


def genus0_invariants(k, dmax):
    raw = json.loads(_core.genus0_invariants(k, dmax))
    return {route: [_frac(c) for c in vals] for route, vals in raw.items()}


def r_tower(k, N, m_max):
    """r_m as coefficient lists in Y."""
    return [[_frac(c) for c in p] for p in json.loads(_core.r_tower(k, N, m_max))]


named_series = _core.named_series


def find_polynomial(k, series, degree, guard=8, order=30):
    cert = json.loads(_core.find_polynomial(k, series, degree, guard, order))
    for mono in cert["monomials"]:
        mono["coeff"] = _frac(mono["coeff"])
    return cert


def _check(name):
    fn = getattr(_core, name)

    def wrapper(*args, **kwargs):
        return json.loads(fn(*args, **kwargs))

    wrapper.__name__ = name
    wrapper.__doc__ = fn.__doc__
    return wrapper


verify_yukawa_identity = _check("verify_yukawa_identity")
pf_check = _check("pf_check")
specialized_checks = _check("specialized_checks")
delta_compare = _check("delta_compare")
tail_constants = _check("tail_constants")
level0_dual_route = _check("level0_dual_route")
dclosure_witnesses = _check("dclosure_witnesses")
verify_zz = _check("verify_zz")
verify_all = _check("verify_all")
run_criterion = _check("run_criterion")
