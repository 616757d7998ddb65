"""Exact p-Bell and poly-Bell numbers.

The extension returns exact values as "num/den" strings; the wrappers here
turn them into fractions.Fraction.
"""

import json
from fractions import Fraction

from . import _core
from ._core import BackendMismatch, ConvergenceError, backends, identity_ids, run_cli, table

__all__ = [
    "BackendMismatch",
    "ConvergenceError",
    "backends",
    "cesaro",
    "dobinski",
    "duality_counterexample",
    "identity_ids",
    "mc_moment",
    "mgf",
    "pbell_column",
    "pbell_number",
    "pbell_poly",
    "polybell_value",
    "run_cli",
    "table",
    "verify",
]


def pbell_number(n, p, backend="explicit", cross_check=False):
    return Fraction(_core.pbell_number(n, p, backend, cross_check))


def pbell_column(n_max, p, backend="ztriangle"):
    return [Fraction(v) for v in _core.pbell_column(n_max, p, backend)]


def polybell_value(n, p):
    """B_n^(p) for any integer p (negative p gives the integer family)."""
    return Fraction(_core.polybell_value(n, p))


def pbell_poly(n, p):
    """Coefficients of B_{n,p}(x), constant term first."""
    return [Fraction(c) for c in _core.pbell_poly(n, p)]


def verify(nmax=12, pmax=5, order=12, only=()):
    return [json.loads(r) for r in _core.verify(nmax, pmax, order, list(only))]


def dobinski(n, p, tol=1e-9):
    return json.loads(_core.dobinski(n, p, tol))


def cesaro(n, p, tol=1e-6):
    return json.loads(_core.cesaro(n, p, tol))


def mc_moment(n, p, x=0, samples=100000, seed=42):
    return json.loads(_core.mc_moment(n, p, str(Fraction(x)), samples, seed))


def mgf(p, t, samples=100000, seed=42):
    return json.loads(_core.mgf(p, t, samples, seed))


def duality_counterexample():
    n, p, lhs, rhs = _core.duality_counterexample()
    return n, p, Fraction(lhs), Fraction(rhs)
