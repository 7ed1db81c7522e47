# Path: core/projective/hilbert.py
# Purpose: Line-bundle cohomology on complete intersections.
# Layer: core/projective.
# Details: Sections by inclusion-exclusion over the Koszul complex, top cohomology by Serre duality.

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from core.arith.binomials import binom
from core.models.domain import CompleteIntersectionSpec

from .bott import chi_line_bundle_pn


@lru_cache(maxsize=None)
def hilbert_h0(spec: CompleteIntersectionSpec, t: int) -> int:
    """h^0(X, O_X(t)) = sum over subsets S of (-1)^|S| C(n + t - d_S, n); 0 for t < 0."""

    if t < 0:
        return 0
    n = spec.ambient_dim
    total = 0
    for size in range(spec.codim + 1):
        sign = -1 if size % 2 else 1
        for subset in combinations(spec.degrees, size):
            total += sign * binom(n + t - sum(subset), n)
    return total


def line_bundle_cohomology(spec: CompleteIntersectionSpec, p: int, t: int) -> int:
    """h^p(X, O_X(t)); only H^0 and H^dim can be nonzero, and omega_X = O_X(sum d_i - n - 1)."""

    if p < 0:
        raise ValueError(f"Cohomological degree must be nonnegative, got {p}.")
    if p == 0:
        return hilbert_h0(spec, t)
    if p < spec.dim:
        return 0
    if p == spec.dim:
        return hilbert_h0(spec, spec.canonical_twist - t)
    return 0


@lru_cache(maxsize=None)
def line_bundle_euler_characteristic(spec: CompleteIntersectionSpec, t: int) -> int:
    """chi(X, O_X(t)) from the Koszul resolution; a polynomial in t of degree dim X."""

    n = spec.ambient_dim
    total = 0
    for size in range(spec.codim + 1):
        sign = -1 if size % 2 else 1
        for subset in combinations(spec.degrees, size):
            total += sign * chi_line_bundle_pn(n, t - sum(subset))
    return total


__all__ = ["hilbert_h0", "line_bundle_cohomology", "line_bundle_euler_characteristic"]
