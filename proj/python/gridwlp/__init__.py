"""Weak Lefschetz computations for ideals of powers of linear forms dual to
grids of points on a smooth quadric in P^3.

Every function takes the grid either as sizes ``a`` and ``b`` (a seeded random
grid) or as ``params`` ("u=1,2,3;v=4,5,6" or grid JSON), and works over F_p
(``prime``) or, with ``rational=True``, over QQ.
"""

import json

from . import _core
from ._core import DEFAULT_PRIME, DEFAULT_SEED, DimensionCapExceeded, FieldError, coker_formula, wlp_verdict_square

__all__ = [
    "DEFAULT_PRIME",
    "DEFAULT_SEED",
    "DimensionCapExceeded",
    "FieldError",
    "bx",
    "coker",
    "coker_formula",
    "hilbert",
    "nll",
    "verify",
    "wlp",
    "wlp_verdict_square",
]


def _options(a=0, b=None, prime=DEFAULT_PRIME, rational=False, trials=3, seed=DEFAULT_SEED, params=None):
    o = _core.Options()
    o.a = a
    o.b = b
    o.prime = prime
    o.rational = rational
    o.trials = trials
    o.seed = seed
    o.params = params or ""
    return o


def wlp(a=0, b=None, *, d, **kw):
    """Full sweep of multiplication by a general linear form; a report dict."""
    return json.loads(_core.wlp(_options(a, b, **kw), d))


def hilbert(a=0, b=None, *, d, **kw):
    """Hilbert function of R/Lambda_{X,d} as a list, degree 0 first."""
    table = json.loads(_core.hilbert(_options(a, b, **kw), d))
    return [row["dim"] for row in table["rows"]]


def coker(a=0, b=None, *, d, t, **kw):
    """Measured cokernel of A_{t-1} -> A_t next to the closed formula (None if it does not apply)."""
    return json.loads(_core.coker(_options(a, b, **kw), d, t))


def nll(a=0, b=None, *, d, locus, **kw):
    return json.loads(_core.nll(_options(a, b, **kw), d, locus))


def bx(a=0, b=None, *, d_max, **kw):
    """WLP bits for d = 1..d_max as a string of 0 and 1."""
    return json.loads(_core.bx(_options(a, b, **kw), d_max))["bits"]


def verify(a_max=5, cross_checks=True, **kw):
    """Run the acceptance suite. Slow: minutes for a_max=5."""
    return json.loads(_core.verify(_options(**kw), a_max, cross_checks))
