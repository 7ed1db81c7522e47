# Path: core/projective/bott.py
# Purpose: Exact dimensions h^p(P^n, Omega^q(t)) and Euler characteristics on projective space.
# Layer: core/projective.
# Details: Closed-form case split used as an independent oracle against the vanishing engine.

from __future__ import annotations

from functools import lru_cache

from sympy import factorial, rf

from core.arith.binomials import binom
from core.models.domain import CohomologyQuery


@lru_cache(maxsize=None)
def _bott(n: int, p: int, q: int, t: int) -> int:
    if q > n or p > n:
        return 0
    if p == 0 and t > q:
        return binom(t + n - q, t) * binom(t - 1, q)
    if p == q and t == 0:
        return 1
    if p == n and t < q - n:
        return binom(-t + q, -t) * binom(-t - 1, n - q)
    return 0


def bott_dimension(n: int, query: CohomologyQuery) -> int:
    """Return h^p(P^n, Omega^q(t)).

    Nonzero only in three places: sections (p = 0, t > q), the diagonal classes
    (p = q, t = 0) and top cohomology (p = n, t < q - n).
    """

    if n < 1:
        raise ValueError(f"Projective space needs positive dimension, got {n}.")
    return _bott(n, query.p, query.q, query.t)


@lru_cache(maxsize=None)
def chi_line_bundle_pn(n: int, t: int) -> int:
    """chi(P^n, O(t)) = C(t + n, n) read as a polynomial in t."""

    return int(rf(t + 1, n) / factorial(n))


@lru_cache(maxsize=None)
def euler_characteristic_omega(n: int, q: int, t: int) -> int:
    """chi(P^n, Omega^q(t)) from 0 -> Omega^q -> wedge^q V (-q) -> Omega^(q-1) -> 0 twisted by t."""

    if n < 1:
        raise ValueError(f"Projective space needs positive dimension, got {n}.")
    if q < 0 or q > n:
        return 0
    if q == 0:
        return chi_line_bundle_pn(n, t)
    return binom(n + 1, q) * chi_line_bundle_pn(n, t - q) - euler_characteristic_omega(n, q - 1, t)


__all__ = ["bott_dimension", "chi_line_bundle_pn", "euler_characteristic_omega"]
