# Path: core/curves/hypersurfaces.py
# Purpose: Hypersurfaces F = 0 in P^n, rational curves P^1 -> P^n, and their plain-text input format.
# Layer: core/curves.
# Details: F is a sympy Poly in x0..xn over Q or F_p; curve components are BinaryForms of a common degree.

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, List, Sequence, Tuple

from sympy import QQ, Poly, symbols
from sympy.core.sympify import SympifyError
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.polyerrors import BasePolynomialError

from core.arith.fields import FieldSpec
from core.arith.forms import S, T, BinaryForm, have_common_zero

_TRANSFORMS = standard_transformations + (convert_xor,)
_VARIABLE = re.compile(r"\bx(\d+)\b")


class CurveInputError(ValueError):
    """Raised for invalid hypersurfaces or curves, mismatched inputs and unparsable text."""


def ambient_symbols(n: int) -> Tuple[Any, ...]:
    return tuple(symbols(f"x0:{n + 1}"))


@dataclass(frozen=True)
class HypersurfaceForm:
    """A hypersurface F = 0 of degree d >= 2 in P^n."""

    n: int
    poly: Poly
    field: FieldSpec

    def __post_init__(self) -> None:
        if self.n < 1:
            raise CurveInputError(f"Ambient dimension must be positive, got {self.n}.")
        if len(self.poly.gens) != self.n + 1:
            raise CurveInputError(f"F must be a polynomial in x0..x{self.n}.")
        if self.poly.is_zero:
            raise CurveInputError("F must be nonzero.")
        if not self.poly.is_homogeneous:
            raise CurveInputError("F must be homogeneous.")
        if self.poly.total_degree() < 2:
            raise CurveInputError(f"Hypersurfaces need degree >= 2, got {self.poly.total_degree()}.")

    @classmethod
    def from_expr(cls, expr: Any, n: int, field: FieldSpec) -> "HypersurfaceForm":
        return cls(n, poly_over(expr, ambient_symbols(n), field), field)

    @property
    def degree(self) -> int:
        return self.poly.total_degree()

    @cached_property
    def partials(self) -> Tuple[Poly, ...]:
        """Formal partial derivatives; in characteristic p they may vanish identically."""

        return tuple(self.poly.diff(x) for x in self.poly.gens)

    def __str__(self) -> str:
        return f"{self.poly.as_expr()} @ char {self.field.characteristic}"


@dataclass(frozen=True)
class RationalCurveMap:
    """A morphism P^1 -> P^n given by forms phi_0..phi_n of a common degree e >= 1 without common zero."""

    field: FieldSpec
    components: Tuple[BinaryForm, ...]

    def __post_init__(self) -> None:
        if len(self.components) < 2:
            raise CurveInputError("A curve in P^n needs at least two components.")
        nonzero = [c for c in self.components if not c.is_zero]
        if not nonzero:
            raise CurveInputError("All components are zero.")
        degrees = {c.degree for c in nonzero}
        if len(degrees) != 1:
            raise CurveInputError(f"Components must share one degree, got {sorted(degrees)}.")
        degree = degrees.pop()
        if degree < 1:
            raise CurveInputError("Constant maps are not curves; need degree e >= 1.")
        # Normalize zero components to the common nominal degree.
        normalized = tuple(c if not c.is_zero else BinaryForm.zero(self.field, degree) for c in self.components)
        object.__setattr__(self, "components", normalized)
        if any(c.field != self.field for c in self.components):
            raise CurveInputError("Curve components live over different fields.")
        if have_common_zero(self.components):
            raise CurveInputError("Components share a zero on P^1, so they do not define a morphism.")

    @classmethod
    def from_values(cls, field: FieldSpec, components: Sequence[Sequence[Any]]) -> "RationalCurveMap":
        return cls(field, tuple(BinaryForm.from_values(field, c) for c in components))

    @property
    def n(self) -> int:
        return len(self.components) - 1

    @property
    def degree(self) -> int:
        return self.components[0].degree

    def reparametrize(self, a: Any, b: Any, c: Any, d: Any) -> "RationalCurveMap":
        """Precompose with s -> a s + b t, t -> c s + d t (must be invertible)."""

        det = self.field.convert(a) * self.field.convert(d) - self.field.convert(b) * self.field.convert(c)
        if det == self.field.zero:
            raise CurveInputError("Reparametrization matrix is singular.")
        return RationalCurveMap(self.field, tuple(f.substitute(a, b, c, d) for f in self.components))

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.components) + ")"


def compose(poly: Poly, curve: RationalCurveMap) -> BinaryForm:
    """Evaluate a homogeneous polynomial in x0..xn along the curve, giving a form of degree deg(poly) * e."""

    field = curve.field
    if poly.is_zero:
        return BinaryForm.zero(field, 0)
    result = BinaryForm.zero(field, poly.total_degree() * curve.degree)
    powers: Dict[Tuple[int, int], BinaryForm] = {}
    for monomial, coefficient in poly.as_dict(native=True).items():
        term = BinaryForm.monomial(field, 0, 0, 1)
        for index, exponent in enumerate(monomial):
            if exponent == 0:
                continue
            key = (index, exponent)
            if key not in powers:
                powers[key] = curve.components[index].power(exponent)
            term = term * powers[key]
        result = result + term.scale(coefficient)
    return result


# Plain-text input
def _parse(text: str, local: Dict[str, Any]) -> Any:
    try:
        return parse_expr(text, local_dict=local, transformations=_TRANSFORMS)
    except (SympifyError, SyntaxError, TypeError) as exc:
        raise CurveInputError(f"Cannot parse {text!r}: {exc}") from exc


def poly_over(expr: Any, gens: Sequence[Any], field: FieldSpec) -> Poly:
    """Read ``expr`` as a polynomial with rational coefficients, then reduce them into ``field``.

    In characteristic p a coefficient a/b means a * b^-1; b divisible by p is rejected.
    """

    try:
        rational = Poly(expr, *gens, domain=QQ)
    except (BasePolynomialError, SympifyError, ValueError, TypeError) as exc:
        raise CurveInputError(f"Not a polynomial in {', '.join(map(str, gens))}: {exc}") from exc
    rep: Dict[Tuple[int, ...], Any] = {}
    for monom, coefficient in rational.as_dict().items():
        try:
            value = field.convert(coefficient)
        except (ZeroDivisionError, ValueError, BasePolynomialError) as exc:
            raise CurveInputError(
                f"Coefficient {coefficient} has no image in characteristic {field.characteristic}."
            ) from exc
        if value != field.zero:
            rep[monom] = value
    return Poly.from_dict(rep, *gens, domain=field.domain)


def parse_hypersurface(line: str, n: int | None = None, default_characteristic: int = 0) -> HypersurfaceForm:
    """Parse "x0^3+x1^3+x2^3+x3^3 @ char 0"; n defaults to the largest variable index used."""

    body, _, suffix = line.partition("@")
    characteristic = default_characteristic
    if suffix.strip():
        match = re.fullmatch(r"\s*char\s+(\d+)\s*", suffix)
        if not match:
            raise CurveInputError(f"Expected '@ char p', got {suffix.strip()!r}.")
        characteristic = int(match.group(1))
    indices = [int(i) for i in _VARIABLE.findall(body)]
    if n is None:
        if not indices:
            raise CurveInputError("F uses no variables x0..xn.")
        n = max(indices)
    elif indices and max(indices) > n:
        raise CurveInputError(f"F uses x{max(indices)} but n = {n}.")
    try:
        field = FieldSpec(characteristic)
    except ValueError as exc:
        raise CurveInputError(str(exc)) from exc
    local = {str(x): x for x in ambient_symbols(n)}
    return HypersurfaceForm.from_expr(_parse(body, local), n, field)


def parse_curve(text: str, field: FieldSpec) -> RationalCurveMap:
    """Parse "(s, -s, t, -t)" into a curve over ``field``."""

    inner = text.strip()
    if not (inner.startswith("(") and inner.endswith(")")):
        raise CurveInputError(f"Curve must be a parenthesized tuple, got {text!r}.")
    local = {"s": S, "t": T}
    forms: List[BinaryForm] = []
    for part in inner[1:-1].split(","):
        expr = _parse(part, local)
        try:
            poly = poly_over(expr, (S, T), field)
        except CurveInputError as exc:
            raise CurveInputError(f"Component {part.strip()!r}: {exc}") from exc
        if poly.is_zero:
            forms.append(BinaryForm.zero(field, 0))
            continue
        if not poly.is_homogeneous:
            raise CurveInputError(f"Component {part.strip()!r} is not homogeneous in s, t.")
        forms.append(BinaryForm.from_poly(field, poly, poly.total_degree()))
    return RationalCurveMap(field, tuple(forms))


@dataclass(frozen=True)
class CurveInput:
    """Contents of an input file: one hypersurface and the curves supplied on it."""

    hypersurface: HypersurfaceForm
    curves: Tuple[RationalCurveMap, ...]


def parse_input(text: str, default_characteristic: int = 0) -> CurveInput:
    """Read "n:", "F:" and "phi:" lines; '#' starts a comment.

    Example::

        F: x0^3+x1^3+x2^3+x3^3 @ char 0
        phi: (s, -s, t, -t)
    """

    n: int | None = None
    f_line: str | None = None
    curve_lines: List[str] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise CurveInputError(f"Expected 'key: value', got {line!r}.")
        key = key.strip().lower()
        if key == "n":
            if not value.strip().isdigit():
                raise CurveInputError(f"'n:' expects a positive integer, got {value.strip()!r}.")
            n = int(value)
        elif key == "f":
            f_line = value
        elif key == "phi":
            curve_lines.append(value)
        else:
            raise CurveInputError(f"Unknown key {key!r}.")
    if f_line is None:
        raise CurveInputError("Input has no 'F:' line.")
    hypersurface = parse_hypersurface(f_line, n, default_characteristic)
    curves = tuple(parse_curve(line, hypersurface.field) for line in curve_lines)
    for curve in curves:
        if curve.n != hypersurface.n:
            raise CurveInputError(f"Curve {curve} has {curve.n + 1} components, P^{hypersurface.n} needs {hypersurface.n + 1}.")
    return CurveInput(hypersurface, curves)


__all__ = [
    "CurveInput",
    "CurveInputError",
    "HypersurfaceForm",
    "RationalCurveMap",
    "ambient_symbols",
    "compose",
    "parse_curve",
    "parse_hypersurface",
    "parse_input",
    "poly_over",
]
