"""Toeplitz operators on weighted Bergman spaces of the unit ball.

Symbols and set expressions may be given as dicts or as JSON text, in the
same grammar the ``bergcomm`` command line accepts.
"""

import json

from . import _core
from ._core import DimensionMismatch, DomainError, ParseError, basis, d_coeff, log_gamma, norm_constant

__all__ = [
    "DimensionMismatch",
    "DomainError",
    "ParseError",
    "acceptance",
    "analytic_test",
    "basis",
    "commutator_max",
    "d_coeff",
    "extract_symbol",
    "log_gamma",
    "matrix",
    "norm_constant",
    "omega",
    "property_p",
    "run",
    "theorem2",
    "zero_set",
]


def _text(spec):
    return spec if isinstance(spec, str) else json.dumps(spec)


def omega(g, m, alpha=0.0):
    return _core.omega(alpha, _text(g), list(m))


def matrix(f, degree, alpha=0.0):
    return _core.matrix(alpha, _text(f), degree)


def commutator_max(f, g, degree, alpha=0.0):
    return _core.commutator_max(alpha, _text(f), _text(g), degree)


def analytic_test(f, degree, alpha=0.0, tol=1e-10):
    return _core.analytic_test(alpha, _text(f), degree, tol)


def extract_symbol(f, degree, alpha=0.0, tol=1e-10):
    return json.loads(_core.extract_symbol(alpha, _text(f), degree, tol))


def theorem2(f, g, degree, alpha=0.0, tol=1e-12):
    return _core.theorem2(alpha, _text(f), _text(g), degree, tol)


def property_p(expr):
    return _core.property_p(_text(expr))


def zero_set(f, l, degree, alpha=0.0, weighted=False):
    return [tuple(m) for m in _core.zero_set(alpha, _text(f), list(l), degree, weighted)]


def acceptance(seed=20240917):
    return _core.acceptance(seed)


def run(*args):
    """Runs a CLI command; returns (exit code, stdout, stderr)."""
    return _core.run([str(a) for a in args])
