# Path: core/arith/binomials.py
# Purpose: Binomial coefficients with a fixed zero-outside-range convention.
# Layer: core/arith.
# Details: Wraps sympy's exact binomial so negative tops never pick up the analytic continuation.

from __future__ import annotations

from functools import lru_cache

from sympy import binomial


@lru_cache(maxsize=None)
def binom(a: int, b: int) -> int:
    """Return C(a, b), defined as 0 whenever a < 0, b < 0 or a < b."""

    if b < 0 or a < 0 or a < b:
        return 0
    return int(binomial(a, b))


__all__ = ["binom"]
