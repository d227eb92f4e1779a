"""Exact orbifold topological vertex computations for Z_n-gerbes.

Series come back as dicts {"vars", "precision", "terms": [{"exp", "coeff"}]}
with exponents and precision as rational strings and coefficients as
cyclotomic polynomial strings in zetaM.
"""

import json
from fractions import Fraction

from . import _orbivertex
from ._orbivertex import DomainError

__all__ = [
    "DomainError",
    "char_table",
    "schur",
    "gw_vertex",
    "dt_vertex",
    "burnside",
    "hurwitz_count",
    "gerbe",
    "verify",
]


def _rat(x):
    return str(Fraction(x))


def char_table(n, d):
    return json.loads(_orbivertex.char_table_json(n, d))


def schur(n, shape, k=0, order=6):
    if not isinstance(shape, str):
        shape = ",".join(str(p) for p in shape)
    return json.loads(_orbivertex.schur_json(n, shape, k, order))


def gw_vertex(mu, a=0, order=6):
    return json.loads(_orbivertex.gw_vertex_json(mu, _rat(a), order))


def dt_vertex(lam, a=0, order=6):
    return json.loads(_orbivertex.dt_vertex_json(lam, _rat(a), order))


def burnside(nu, mu, order=6):
    return json.loads(_orbivertex.burnside_json(nu, mu, order))


def hurwitz_count(nu, mu, r, gamma=()):
    """Count as a Fraction when rational, otherwise the cyclotomic string."""
    s = _orbivertex.hurwitz_count(nu, mu, r, list(gamma))
    try:
        return Fraction(s)
    except ValueError:
        return s


def gerbe(n, k, b, degree, order=6):
    return json.loads(_orbivertex.gerbe_json(n, k, _rat(b), degree, order))


def verify(suite, max_n=2, max_d=2, order=6):
    return json.loads(_orbivertex.verify_json(suite, max_n, max_d, order))
