# Path: core/arith/fields.py
# Purpose: Describe the base field (Q or F_p) and convert scalars into and out of it.
# Layer: core/arith.
# Details: Backed by sympy's QQ and GF(p) domains; F_p elements use the nonnegative representation.

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any

from sympy import Integer, Rational, isprime
from sympy.polys.domains import GF, QQ
from sympy.polys.domains.domain import Domain

MAX_CHARACTERISTIC = 2**31


@lru_cache(maxsize=None)
def _domain_for(characteristic: int) -> Domain:
    if characteristic == 0:
        return QQ
    return GF(characteristic, symmetric=False)


@dataclass(frozen=True)
class FieldSpec:
    """Base field of a computation: characteristic 0 means Q, otherwise the prime field F_p."""

    characteristic: int = 0

    def __post_init__(self) -> None:
        p = self.characteristic
        if p < 0:
            raise ValueError(f"Characteristic must be nonnegative, got {p}.")
        if p != 0 and (p >= MAX_CHARACTERISTIC or not isprime(p)):
            raise ValueError(f"Characteristic must be 0 or a prime below 2^31, got {p}.")

    @property
    def domain(self) -> Domain:
        """Return the sympy domain used for coefficients."""

        return _domain_for(self.characteristic)

    @property
    def zero(self) -> Any:
        return self.domain.zero

    @property
    def one(self) -> Any:
        return self.domain.one

    def convert(self, value: Any) -> Any:
        """Coerce an int, Fraction or sympy rational into the field."""

        domain = self.domain
        if isinstance(value, Fraction):
            return domain.convert(value.numerator) / domain.convert(value.denominator)
        if isinstance(value, Rational) and not isinstance(value, Integer):
            return domain.convert(int(value.p)) / domain.convert(int(value.q))
        if isinstance(value, (int, Integer)):
            return domain.convert(int(value))
        return domain.convert(value)

    def to_python(self, element: Any) -> int | Fraction:
        """Return a plain int (or Fraction over Q) for serialization and display."""

        value = self.domain.to_sympy(element)
        if self.characteristic:
            return int(value) % self.characteristic
        if value.q == 1:
            return int(value.p)
        return Fraction(int(value.p), int(value.q))

    def describe(self) -> str:
        return "Q" if self.characteristic == 0 else f"F_{self.characteristic}"


__all__ = ["FieldSpec", "MAX_CHARACTERISTIC"]
