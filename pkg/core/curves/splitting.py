# Path: core/curves/splitting.py
# Purpose: Splitting types of phi^*T_{P^n} and phi^*T_X along rational curves phi: P^1 -> P^n.
# Layer: core/curves.
# Details: Every bundle is presented as the kernel of a graded row of forms; generator twists come from
#          degree-by-degree nullspaces, with second differences of the section counts as a cross-check.

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from config.settings import SplittingSettings
from core.arith.fields import FieldSpec
from core.arith.forms import BinaryForm, FormMatrix
from core.arith.linalg import (
    Vector,
    forms_to_vector,
    independent_subset,
    nullspace_by_degree,
    section_count,
    solution_degrees,
    solve,
)

from .hypersurfaces import CurveInputError, HypersurfaceForm, RationalCurveMap
from .probes import require_smooth_along


class SplittingWindowError(RuntimeError):
    """Raised when generator recovery does not close inside the allowed twist window."""


@dataclass(frozen=True)
class SplittingType:
    """Multiset {a_i} of a bundle O(a_1) + ... + O(a_r) on P^1, stored in descending order."""

    degrees: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "degrees", tuple(sorted(self.degrees, reverse=True)))

    @property
    def rank(self) -> int:
        return len(self.degrees)

    @property
    def degree(self) -> int:
        return sum(self.degrees)

    @property
    def free(self) -> bool:
        return all(a >= 0 for a in self.degrees)

    @property
    def very_free(self) -> bool:
        return all(a >= 1 for a in self.degrees)

    @property
    def positive_count(self) -> int:
        return sum(1 for a in self.degrees if a > 0)

    def dual(self) -> "SplittingType":
        return SplittingType(tuple(-a for a in self.degrees))

    def to_dict(self) -> Dict:
        return {
            "degrees": list(self.degrees),
            "rank": self.rank,
            "degree": self.degree,
            "free": self.free,
            "very_free": self.very_free,
            "positive_count": self.positive_count,
        }

    def __str__(self) -> str:
        return " ⊕ ".join(f"O({a})" for a in self.degrees)


@dataclass(frozen=True)
class Generator:
    """Minimal generator of a kernel bundle: a section of K(twist), one form per column."""

    twist: int
    forms: Tuple[BinaryForm, ...]


@dataclass(frozen=True)
class KernelSplitting:
    """Generators of ker M and the section counts h(m) observed while finding them.

    A generator at twist m spans a summand O(-m) of the kernel.
    """

    generators: Tuple[Generator, ...]
    section_counts: Tuple[Tuple[int, int], ...]

    @property
    def twists(self) -> Tuple[int, ...]:
        return tuple(g.twist for g in self.generators)


def predicted_sections(twists: Sequence[int], twist: int) -> int:
    """h^0 of the sum of O(twist - m_i)."""

    return sum(max(0, twist - m + 1) for m in twists)


def _multiples(field: FieldSpec, generator: Generator, twist: int, degrees: Sequence[int]) -> List[Vector]:
    """Coefficient vectors of all monomial multiples of a generator that land in twist ``twist``."""

    shift = twist - generator.twist
    vectors: List[Vector] = []
    for a in range(shift + 1):
        monomial = BinaryForm.monomial(field, shift, a)
        products = [
            BinaryForm.zero(field, max(slot, 0)) if form.is_zero else monomial * form
            for slot, form in zip(degrees, generator.forms)
        ]
        vectors.append(forms_to_vector(field, products, degrees))
    return vectors


def kernel_splitting(
    matrix: FormMatrix,
    rank: int,
    twist_sum: int,
    initial_span: int,
    settings: Optional[SplittingSettings] = None,
    label: str = "kernel",
) -> KernelSplitting:
    """Find minimal generators of ker M twist by twist until ``rank`` of them are known.

    ``twist_sum`` is the expected sum of generator twists (minus the degree of the kernel). The window
    starts at the smallest column degree, below which no sections exist, spans ``initial_span`` twists
    and grows by ``step`` up to ``settings.max_extensions`` times.
    """

    settings = settings or SplittingSettings()
    field = matrix.field
    start = min(matrix.col_degrees)
    limit = start + initial_span + settings.window_slack
    step = max(1, initial_span // 4)
    extensions = 0
    counts: Dict[int, int] = {}
    generators: List[Generator] = []

    def diagnostics() -> str:
        observed = ", ".join(f"h({m})={h}" for m, h in sorted(counts.items()))
        return f"{label}: rank {rank}, generator twists {[g.twist for g in generators]}, {observed}"

    twist = start
    while len(generators) < rank:
        if twist > limit:
            if extensions >= settings.max_extensions:
                raise SplittingWindowError(f"Twist window exhausted at {twist}; {diagnostics()}")
            extensions += 1
            limit += step
            logger.info("Extending twist window for {} to {} (extension {})", label, limit, extensions)
        basis = nullspace_by_degree(matrix, twist)
        counts[twist] = len(basis)
        fresh = counts[twist] - 2 * counts.get(twist - 1, 0) + counts.get(twist - 2, 0)
        logger.debug("{}: h({}) = {}, new generators {}", label, twist, counts[twist], fresh)
        if fresh < 0:
            raise SplittingWindowError(f"Negative second difference at twist {twist}; {diagnostics()}")
        if fresh > 0:
            degrees = solution_degrees(matrix, twist)
            ncols = sum(d + 1 for d in degrees if d >= 0)
            span = [v for g in generators for v in _multiples(field, g, twist, degrees)]
            candidates = [forms_to_vector(field, b, degrees) for b in basis]
            chosen = independent_subset(field, span, candidates, ncols)
            if len(chosen) != fresh:
                raise SplittingWindowError(
                    f"Found {len(chosen)} generators at twist {twist}, section counts predict {fresh}; {diagnostics()}"
                )
            generators.extend(Generator(twist, basis[i]) for i in chosen)
        twist += 1

    if len(generators) != rank:
        raise SplittingWindowError(f"Recovered {len(generators)} generators, expected {rank}; {diagnostics()}")
    twists = [g.twist for g in generators]
    for probe in range(twist, twist + settings.window_slack + 1):
        observed = section_count(matrix, probe)
        counts[probe] = observed
        if observed != predicted_sections(twists, probe):
            raise SplittingWindowError(f"Window did not close: h({probe}) = {observed}; {diagnostics()}")
    if sum(twists) != twist_sum:
        raise SplittingWindowError(f"Generator twists sum to {sum(twists)}, expected {twist_sum}; {diagnostics()}")
    return KernelSplitting(generators=tuple(generators), section_counts=tuple(sorted(counts.items())))


def splitting_of_pullback_tangent_pn(
    n: int, curve: RationalCurveMap, settings: Optional[SplittingSettings] = None
) -> SplittingType:
    """Splitting type of phi^*T_{P^n}: rank n, degree e(n+1).

    phi^*Omega_{P^n} is the kernel of (phi_0 ... phi_n): O(-e)^(n+1) -> O, so each generator at twist m is a
    summand O(-m) of the cotangent side and O(m) of the tangent side.
    """

    if curve.n != n:
        raise CurveInputError(f"Curve has {curve.n + 1} components, P^{n} needs {n + 1}.")
    e = curve.degree
    row = FormMatrix.row(curve.field, curve.components, col_degrees=[e] * (n + 1), row_degree=0)
    kernel = kernel_splitting(row, rank=n, twist_sum=e * (n + 1), initial_span=e + n + 4, settings=settings, label="Omega_P")
    return SplittingType(kernel.twists)


def _euler_coordinates(
    field: FieldSpec, curve: RationalCurveMap, matrix: FormMatrix, kernel: KernelSplitting
) -> Tuple[BinaryForm, ...]:
    """Write the Euler section v = (phi_0, ..., phi_n) as sum c_i gen_i with deg c_i = -twist_i."""

    degrees = solution_degrees(matrix, 0)
    columns: List[Vector] = []
    layout: List[Tuple[int, int]] = []
    for index, generator in enumerate(kernel.generators):
        coefficient_degree = -generator.twist
        if coefficient_degree < 0:
            continue
        for a in range(coefficient_degree + 1):
            monomial = BinaryForm.monomial(field, coefficient_degree, a)
            columns.append(forms_to_vector(field, [monomial * f for f in generator.forms], degrees))
            layout.append((index, a))
    target = forms_to_vector(field, curve.components, degrees)
    solution = None
    if columns:
        rows = [[column[r] for column in columns] for r in range(len(target))]
        solution = solve(field, rows, target, len(columns))
    if solution is None:
        raise SplittingWindowError("Euler section is not in the span of the kernel generators.")
    coeffs: Dict[int, List] = {}
    for (index, a), value in zip(layout, solution):
        coeffs.setdefault(index, [field.zero] * (-kernel.generators[index].twist + 1))[a] = value
    result = []
    for index, generator in enumerate(kernel.generators):
        if index in coeffs:
            result.append(BinaryForm(field, -generator.twist, tuple(coeffs[index])))
        else:
            result.append(BinaryForm.zero(field, 0))
    return tuple(result)


def splitting_of_pullback_cotangent(
    hypersurface: HypersurfaceForm, curve: RationalCurveMap, settings: Optional[SplittingSettings] = None
) -> SplittingType:
    """Splitting type of phi^*Omega_X for a hypersurface X smooth along phi: rank n-1, degree -e(n+1-d).

    K = ker(G_0 ... G_n): O(e)^(n+1) -> O(de) contains the Euler section and phi^*T_X = K / O, so
    phi^*Omega_X is the kernel of the dual row K^* -> O given by the coordinates of the Euler section.

    Raises:
        CurveInputError: the curve is not on X or does not match it.
        DegenerateGradientError: X is singular somewhere along the curve.
    """

    gradient = require_smooth_along(hypersurface, curve)
    field = curve.field
    n, d, e = hypersurface.n, hypersurface.degree, curve.degree
    gradient_row = FormMatrix.row(field, gradient, col_degrees=[-e] * (n + 1), row_degree=-d * e)
    kernel = kernel_splitting(
        gradient_row,
        rank=n,
        twist_sum=d * e - (n + 1) * e,
        initial_span=e * d + e + n + 4,
        settings=settings,
        label="gradient kernel",
    )
    coordinates = _euler_coordinates(field, curve, gradient_row, kernel)
    euler_row = FormMatrix.row(field, coordinates, col_degrees=[-m for m in kernel.twists], row_degree=0)
    cotangent = kernel_splitting(
        euler_row,
        rank=n - 1,
        twist_sum=e * (n + 1 - d),
        initial_span=e * d + e + n + 4,
        settings=settings,
        label="Omega_X",
    )
    # A generator at twist m is a summand O(-m).
    return SplittingType(tuple(-m for m in cotangent.twists))


def splitting_of_pullback_tangent(
    hypersurface: HypersurfaceForm, curve: RationalCurveMap, settings: Optional[SplittingSettings] = None
) -> SplittingType:
    """Splitting type of phi^*T_X: the dual of :func:`splitting_of_pullback_cotangent`, degree e(n+1-d)."""

    return splitting_of_pullback_cotangent(hypersurface, curve, settings).dual()


__all__ = [
    "Generator",
    "KernelSplitting",
    "SplittingType",
    "SplittingWindowError",
    "kernel_splitting",
    "predicted_sections",
    "splitting_of_pullback_cotangent",
    "splitting_of_pullback_tangent",
    "splitting_of_pullback_tangent_pn",
]
