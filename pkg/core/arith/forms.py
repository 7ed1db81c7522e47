# Path: core/arith/forms.py
# Purpose: Homogeneous binary forms in (s, t) and graded matrices of such forms.
# Layer: core/arith.
# Details: Coefficients live in a FieldSpec domain; products and substitutions go through sympy Poly.

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, List, Sequence, Tuple

from sympy import Poly, symbols

from .fields import FieldSpec

S, T = symbols("s t")


class FormDegreeError(ValueError):
    """Raised when forms or graded matrices carry inconsistent degrees."""


@dataclass(frozen=True)
class BinaryForm:
    """Homogeneous form sum_i c_i s^i t^(d-i); ``coeffs[i]`` is the coefficient of s^i t^(d-i).

    The zero form keeps a nominal degree so that sums stay well-typed.
    """

    field: FieldSpec
    degree: int
    coeffs: Tuple[Any, ...]

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise FormDegreeError(f"Binary forms need a nonnegative degree, got {self.degree}.")
        if len(self.coeffs) != self.degree + 1:
            raise FormDegreeError(
                f"Form of degree {self.degree} needs {self.degree + 1} coefficients, got {len(self.coeffs)}."
            )

    # Constructors
    @classmethod
    def zero(cls, field: FieldSpec, degree: int) -> "BinaryForm":
        return cls(field, degree, tuple(field.zero for _ in range(degree + 1)))

    @classmethod
    def from_values(cls, field: FieldSpec, values: Sequence[Any]) -> "BinaryForm":
        """Build a form of degree len(values) - 1 from plain scalars (s^i t^(d-i) order)."""

        if not values:
            raise FormDegreeError("At least one coefficient is required.")
        return cls(field, len(values) - 1, tuple(field.convert(v) for v in values))

    @classmethod
    def monomial(cls, field: FieldSpec, degree: int, s_power: int, coefficient: Any = 1) -> "BinaryForm":
        if not 0 <= s_power <= degree:
            raise FormDegreeError(f"Monomial s^{s_power} does not exist in degree {degree}.")
        coeffs = [field.zero] * (degree + 1)
        coeffs[s_power] = field.convert(coefficient)
        return cls(field, degree, tuple(coeffs))

    @classmethod
    def from_poly(cls, field: FieldSpec, poly: Poly, degree: int) -> "BinaryForm":
        """Read a homogeneous Poly in (s, t) back into coefficient form."""

        coeffs = [field.zero] * (degree + 1)
        for (i, j), value in poly.as_dict(native=True).items():
            if i + j != degree:
                raise FormDegreeError(f"Term s^{i} t^{j} is not of degree {degree}.")
            coeffs[i] = field.domain.convert(value)
        return cls(field, degree, tuple(coeffs))

    # Predicates and views
    @property
    def is_zero(self) -> bool:
        return all(c == self.field.zero for c in self.coeffs)

    def to_poly(self) -> Poly:
        rep = {(i, self.degree - i): c for i, c in enumerate(self.coeffs) if c != self.field.zero}
        return Poly.from_dict(rep, S, T, domain=self.field.domain)

    def values(self) -> List[int | Any]:
        """Coefficients as plain Python scalars."""

        return [self.field.to_python(c) for c in self.coeffs]

    # Arithmetic
    def _check_compatible(self, other: "BinaryForm") -> None:
        if other.field != self.field:
            raise FormDegreeError(f"Field mismatch: {self.field.describe()} vs {other.field.describe()}.")

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        self._check_compatible(other)
        if other.degree != self.degree:
            raise FormDegreeError(f"Cannot add forms of degrees {self.degree} and {other.degree}.")
        return BinaryForm(self.field, self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "BinaryForm":
        return BinaryForm(self.field, self.degree, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        return self + (-other)

    def scale(self, scalar: Any) -> "BinaryForm":
        factor = self.field.convert(scalar)
        return BinaryForm(self.field, self.degree, tuple(factor * c for c in self.coeffs))

    def __mul__(self, other: "BinaryForm") -> "BinaryForm":
        self._check_compatible(other)
        degree = self.degree + other.degree
        if self.is_zero or other.is_zero:
            return BinaryForm.zero(self.field, degree)
        return BinaryForm.from_poly(self.field, self.to_poly() * other.to_poly(), degree)

    def power(self, exponent: int) -> "BinaryForm":
        if exponent < 0:
            raise FormDegreeError("Negative powers of binary forms are not forms.")
        if exponent == 0:
            return BinaryForm.monomial(self.field, 0, 0)
        degree = self.degree * exponent
        if self.is_zero:
            return BinaryForm.zero(self.field, degree)
        return BinaryForm.from_poly(self.field, self.to_poly() ** exponent, degree)

    def substitute(self, a: Any, b: Any, c: Any, d: Any) -> "BinaryForm":
        """Apply s -> a*s + b*t, t -> c*s + d*t."""

        new_s = BinaryForm.from_values(self.field, [b, a])
        new_t = BinaryForm.from_values(self.field, [d, c])
        result = BinaryForm.zero(self.field, self.degree)
        for i, coefficient in enumerate(self.coeffs):
            if coefficient == self.field.zero:
                continue
            term = (new_s.power(i) * new_t.power(self.degree - i)).scale(coefficient)
            result = result + term
        return result

    def dehomogenize(self) -> Poly:
        """Return the univariate polynomial f(s, 1)."""

        rep = {(i,): c for i, c in enumerate(self.coeffs) if c != self.field.zero}
        return Poly.from_dict(rep, S, domain=self.field.domain)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return str(self.to_poly().as_expr())


def have_common_zero(forms: Iterable[BinaryForm]) -> bool:
    """True if the nonzero forms share a zero on P^1 over the algebraic closure.

    Zero forms vanish everywhere and do not constrain; an empty family has a common zero.
    """

    nonzero = [f for f in forms if not f.is_zero]
    if not nonzero:
        return True
    if all(f.coeffs[f.degree] == f.field.zero for f in nonzero):
        return True  # all vanish at [1:0]
    gcd = nonzero[0].dehomogenize()
    for form in nonzero[1:]:
        gcd = gcd.gcd(form.dehomogenize())
        if gcd.degree() <= 0:
            return False
    return gcd.degree() > 0


@dataclass(frozen=True)
class FormMatrix:
    """Graded matrix of binary forms: entry (i, j) has degree col_degrees[j] - row_degrees[i].

    Read as a map from the sum of O(-col_degrees[j]) to the sum of O(-row_degrees[i]) on P^1.
    """

    field: FieldSpec
    entries: Tuple[Tuple[BinaryForm, ...], ...]
    row_degrees: Tuple[int, ...]
    col_degrees: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != len(self.row_degrees):
            raise FormDegreeError("Row degree labels do not match the number of rows.")
        for i, row in enumerate(self.entries):
            if len(row) != len(self.col_degrees):
                raise FormDegreeError(f"Row {i} has {len(row)} entries, expected {len(self.col_degrees)}.")
            for j, entry in enumerate(row):
                if entry.field != self.field:
                    raise FormDegreeError(f"Entry ({i}, {j}) lives over a different field.")
                if entry.is_zero:
                    continue
                expected = self.col_degrees[j] - self.row_degrees[i]
                if entry.degree != expected:
                    raise FormDegreeError(
                        f"Entry ({i}, {j}) has degree {entry.degree}, graded labels require {expected}."
                    )

    @classmethod
    def row(cls, field: FieldSpec, forms: Sequence[BinaryForm], col_degrees: Sequence[int], row_degree: int = 0) -> "FormMatrix":
        """Single-row matrix, the shape of every map to a line bundle used here."""

        return cls(field, (tuple(forms),), (row_degree,), tuple(col_degrees))

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.row_degrees), len(self.col_degrees)


__all__ = ["BinaryForm", "FormDegreeError", "FormMatrix", "S", "T", "have_common_zero"]
