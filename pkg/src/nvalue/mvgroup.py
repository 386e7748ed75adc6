"""Numeric n-valued group on the complex numbers.

The product of x and y is the n-multiset [(x^(1/n) + eps^r y^(1/n))^n] over
the n-th roots of unity eps^r, with principal-branch roots; the result is
independent of the branch chosen.  Unit is 0, inverse is (-1)^n x.
Multisets are compared by minimum-cost bipartite matching under a
scale-aware tolerance.
"""

from __future__ import annotations

import cmath
from functools import lru_cache

import numpy as np
from scipy.optimize import linear_sum_assignment

from . import construct


class RootFindingFailure(RuntimeError):
    """Numeric root extraction did not converge to finite values."""


def nth_root(x: complex, n: int) -> complex:
    """Principal n-th root: argument of the result in (-pi/n, pi/n]."""
    x = complex(x)
    if x == 0:
        return 0j
    return cmath.exp(cmath.log(x) / n)


def mul_n(x: complex, y: complex, n: int) -> list[complex]:
    """The n-multiset product of x and y.

    Zero operands short-circuit: the unit axiom gives [other]*n exactly,
    with no root-of-unity rounding.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return [complex(x) + complex(y)]
    if x == 0:
        return [complex(y)] * n
    if y == 0:
        return [complex(x)] * n
    a = nth_root(x, n)
    b = nth_root(y, n)
    return [(a + cmath.exp(2j * cmath.pi * r / n) * b) ** n for r in range(1, n + 1)]


def inv(x: complex, n: int) -> complex:
    """Group inverse: (-1)^n x."""
    return complex(x) if n % 2 == 0 else -complex(x)


def eq_multiset(a, b, tol: float) -> bool:
    """Multiset equality by minimum-cost perfect matching.

    A matched pair (p, q) counts as equal when |p - q| <= tol * max(1,
    |p|, |q|).  Cubic matching avoids the false negatives a sort-and-zip
    comparison produces when values cluster.
    """
    if len(a) != len(b):
        return False
    if not a:
        return True
    av = np.asarray(list(a), dtype=complex)
    bv = np.asarray(list(b), dtype=complex)
    if not (np.all(np.isfinite(av)) and np.all(np.isfinite(bv))):
        return False
    cost = np.abs(av[:, None] - bv[None, :])
    rows, cols = linear_sum_assignment(cost)
    scale = np.maximum(1.0, np.maximum(np.abs(av[rows]), np.abs(bv[cols])))
    return bool(np.all(cost[rows, cols] <= tol * scale))


def contains_zero(values, tol: float) -> bool:
    """Scale-aware membership of 0 in a multiset of complex values."""
    vals = [abs(v) for v in values]
    scale = max(1.0, max(vals, default=0.0))
    return min(vals, default=0.0) <= tol * scale


def check_associativity(x: complex, y: complex, z: complex, n: int, tol: float) -> bool:
    """Compare x*(y*z) against (x*y)*z as n^2-multisets."""
    left = [w for inner in mul_n(y, z, n) for w in mul_n(x, inner, n)]
    right = [w for inner in mul_n(x, y, n) for w in mul_n(inner, z, n)]
    return eq_multiset(left, right, tol)


@lru_cache(maxsize=None)
def _pn_z_coefficients(n: int):
    # coefficient polynomials of z^0..z^n in p_n, each over (x, y)
    return tuple(construct.build_pn(n).coefficients_in("z"))


def pn_roots(x: complex, y: complex, n: int) -> list[complex]:
    """Numeric z-roots of p_n(. ; x, y) via the companion matrix."""
    czs = _pn_z_coefficients(n)
    desc = [czs[k].eval_complex((x, y)) for k in range(n, -1, -1)]
    if not all(cmath.isfinite(c) for c in desc):
        raise RootFindingFailure("polynomial coefficients are not finite")
    try:
        roots = np.roots(np.asarray(desc, dtype=complex))
    except np.linalg.LinAlgError as exc:  # pragma: no cover - conditioning
        raise RootFindingFailure(str(exc)) from exc
    if not np.all(np.isfinite(roots)):
        raise RootFindingFailure("non-finite roots returned")
    return [complex(r) for r in roots]


def roots_match_pn(x: complex, y: complex, n: int, tol: float) -> bool:
    """True iff the z-roots of p_n(.; x, y) equal inv(x)*inv(y) as multisets."""
    target = mul_n(inv(x, n), inv(y, n), n)
    return eq_multiset(pn_roots(x, y, n), target, tol)


__all__ = [
    "RootFindingFailure",
    "check_associativity",
    "contains_zero",
    "eq_multiset",
    "inv",
    "mul_n",
    "nth_root",
    "pn_roots",
    "roots_match_pn",
]
