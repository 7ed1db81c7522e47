# Path: tests/test_curves.py
# Purpose: Rational curves on hypersurfaces: parsing, probes, splitting types and curve evidence.
# Layer: tests.
# Details: Ground-truth splittings come from lines and conics with known normal bundles; a seeded fuzzer
#          checks rank, degree and reparametrization invariance over small prime fields.

from __future__ import annotations

import random
from itertools import combinations_with_replacement
from typing import List, Optional

import pytest
from sympy import Poly

from config.settings import SplittingSettings
from core.arith import BinaryForm, FieldSpec, FormMatrix
from core.arith.linalg import nullspace_vectors, section_count
from core.curves import (
    CurveInputError,
    DegenerateGradientError,
    HypersurfaceForm,
    ProbeResult,
    RationalCurveMap,
    SplittingType,
    SplittingWindowError,
    gradient_along,
    on_curve_check,
    parse_curve,
    parse_hypersurface,
    parse_input,
    positive_rank_lower_bound,
    singularity_probe_along,
    splitting_of_pullback_cotangent,
    splitting_of_pullback_tangent,
    splitting_of_pullback_tangent_pn,
    uniruledness_evidence,
)
from core.curves.hypersurfaces import ambient_symbols, compose
from core.curves.splitting import kernel_splitting

Q = FieldSpec()

QUADRIC_SURFACE = "x0*x3 - x1*x2"
FERMAT_CUBIC_SURFACE = "x0^3 + x1^3 + x2^3 + x3^3"


def surface(text: str, characteristic: int = 0) -> HypersurfaceForm:
    return parse_hypersurface(f"{text} @ char {characteristic}")


def curve(text: str, field: FieldSpec = Q) -> RationalCurveMap:
    return parse_curve(text, field)


# Parsing and validation
def test_parse_input_file():
    data = parse_input(
        """
        # ruling line on a smooth quadric
        F: x0*x3 - x1*x2 @ char 0
        phi: (s, t, 0, 0)
        phi: (s, 0, t, 0)
        """
    )
    assert data.hypersurface.n == 3 and data.hypersurface.degree == 2
    assert len(data.curves) == 2
    assert data.curves[0].degree == 1


def test_parse_characteristic_and_explicit_n():
    data = parse_input("n: 4\nF: x0^2 + x1^2 @ char 7\nphi: (s, 3*s, t, 0, 0)", default_characteristic=0)
    assert data.hypersurface.n == 4
    assert data.hypersurface.field == FieldSpec(7)
    assert parse_input("F: x0*x1 + x2^2\nphi: (s^2, -t^2, s*t)", default_characteristic=5).hypersurface.field == FieldSpec(5)


def test_rational_coefficients_reduce_mod_p():
    hypersurface = parse_hypersurface("x0*x3/2 - x1*x2 @ char 5")
    x0, x1, x2, x3 = ambient_symbols(3)
    assert hypersurface.poly == Poly(3 * x0 * x3 - x1 * x2, x0, x1, x2, x3, domain=FieldSpec(5).domain)
    assert parse_curve("(s/3, t)", FieldSpec(7)) == parse_curve("(5*s, t)", FieldSpec(7))
    with pytest.raises(CurveInputError):
        parse_hypersurface("x0*x3/5 - x1*x2 @ char 5")
    with pytest.raises(CurveInputError):
        parse_curve("(s/7, t)", FieldSpec(7))


@pytest.mark.parametrize(
    "text",
    [
        "phi: (s, t)",  # no F
        "F: x0*x1\nfoo: 1",
        "F: x0^2 + x1 @ char 0",  # not homogeneous
        "F: x0 + x1",  # degree 1
        "F: x0^2 @ char 4",
        "F: x0*x3 - x1*x2\nphi: (s, t, 0)",  # wrong component count
        "F: x0*x3 - x1*x2\nphi: (s, t^2, 0, 0)",  # mixed degrees
        "F: x0*x3 - x1*x2\nphi: (s^2, s*t, 0, 0)",  # common zero
        "F: x0*x3 - x1*x2\nphi: s, t, 0, 0",
        "F: x0*x3 - x1*x2\nphi: (s + 1, t, 0, 0)",
    ],
)
def test_parse_errors(text):
    with pytest.raises(CurveInputError):
        parse_input(text)


def test_curve_validation():
    with pytest.raises(CurveInputError):
        RationalCurveMap.from_values(Q, [[0, 0], [0, 0]])
    with pytest.raises(CurveInputError):
        RationalCurveMap.from_values(Q, [[1], [2]])  # constant map
    line = curve("(s, t, 0)")
    assert line.n == 2 and line.degree == 1
    with pytest.raises(CurveInputError):
        line.reparametrize(1, 2, 2, 4)


# Probes
def test_on_curve_check():
    assert on_curve_check(surface(QUADRIC_SURFACE), curve("(s, t, 0, 0)"))
    assert on_curve_check(surface(FERMAT_CUBIC_SURFACE), curve("(s, -s, t, -t)"))
    assert not on_curve_check(surface(QUADRIC_SURFACE), curve("(s, t, t, s)"))


def test_on_curve_check_rejects_mismatches():
    with pytest.raises(CurveInputError):
        on_curve_check(surface(QUADRIC_SURFACE), curve("(s, t, 0)"))
    with pytest.raises(CurveInputError):
        on_curve_check(surface(QUADRIC_SURFACE), curve("(s, t, 0, 0)", FieldSpec(5)))


def test_singularity_probe():
    assert singularity_probe_along(surface(FERMAT_CUBIC_SURFACE), curve("(s, -s, t, -t)")) is ProbeResult.OK
    assert singularity_probe_along(surface(QUADRIC_SURFACE), curve("(s, t, 0, 0)")) is ProbeResult.OK
    f3 = FieldSpec(3)
    assert (
        singularity_probe_along(surface(FERMAT_CUBIC_SURFACE, 3), curve("(s, -s, t, -t)", f3))
        is ProbeResult.DEGENERATE
    )
    # x0*x1 = 0 is singular along x0 = x1 = 0, which contains this line.
    cone = parse_hypersurface("x0*x1 @ char 0", n=2)
    assert singularity_probe_along(cone, curve("(0, s, t)")) is ProbeResult.DEGENERATE


# Splitting types
@pytest.mark.parametrize(
    "n,text,expected",
    [
        (2, "(s, t, 0)", (2, 1)),
        (3, "(s, t, 0, 0)", (2, 1, 1)),
        (2, "(s^2, s*t, t^2)", (3, 3)),
        (1, "(s, t)", (2,)),
        (1, "(s^2, t^2)", (4,)),
    ],
)
def test_projective_space_splitting(n, text, expected):
    splitting = splitting_of_pullback_tangent_pn(n, curve(text))
    assert splitting.degrees == expected
    assert splitting.rank == n
    assert splitting.degree == curve(text).degree * (n + 1)


@pytest.mark.parametrize(
    "f,phi,characteristic,expected",
    [
        (QUADRIC_SURFACE, "(s, t, 0, 0)", 0, (2, 0)),
        (QUADRIC_SURFACE, "(s, 0, t, 0)", 0, (2, 0)),
        (FERMAT_CUBIC_SURFACE, "(s, -s, t, -t)", 0, (2, -1)),
        ("x0*x4 - x1*x2 + x3^2", "(s, 0, t, 0, 0)", 0, (2, 1, 0)),
        ("x0*x4 - x1*x2 + x3^2", "(s, t, 0, 0, 0)", 0, (2, 1, 0)),
        ("x0*x2 - x1^2", "(s^2, s*t, t^2)", 0, (2,)),
        (QUADRIC_SURFACE, "(s, t, 0, 0)", 7, (2, 0)),
        (FERMAT_CUBIC_SURFACE, "(s, -s, t, -t)", 5, (2, -1)),
    ],
)
def test_hypersurface_splitting(f, phi, characteristic, expected):
    hypersurface = surface(f, characteristic)
    line = curve(phi, hypersurface.field)
    splitting = splitting_of_pullback_tangent(hypersurface, line)
    assert splitting.degrees == expected
    assert splitting.rank == hypersurface.n - 1
    assert splitting.degree == line.degree * (hypersurface.n + 1 - hypersurface.degree)
    if line.degree == 1:
        assert splitting.degrees[0] >= 2


@pytest.mark.parametrize(
    "f,phi,characteristic",
    [
        (QUADRIC_SURFACE, "(s, t, 0, 0)", 0),
        (FERMAT_CUBIC_SURFACE, "(s, -s, t, -t)", 5),
        ("x0*x4 - x1*x2 + x3^2", "(s, t, 0, 0, 0)", 0),
        ("x0*x2 - x1^2", "(s^2, s*t, t^2)", 7),
    ],
)
def test_cotangent_is_dual_of_tangent(f, phi, characteristic):
    hypersurface = surface(f, characteristic)
    line = curve(phi, hypersurface.field)
    cotangent = splitting_of_pullback_cotangent(hypersurface, line)
    tangent = splitting_of_pullback_tangent(hypersurface, line)
    assert cotangent.dual() == tangent
    assert cotangent.degree == -tangent.degree
    # 0 -> O(k) -> K(k) -> phi^*T_X(k) -> 0 with K the gradient kernel; exact on sections for k >= -1.
    n, e = hypersurface.n, line.degree
    gradient_row = FormMatrix.row(
        hypersurface.field,
        gradient_along(hypersurface, line),
        col_degrees=[-e] * (n + 1),
        row_degree=-hypersurface.degree * e,
    )
    for k in range(-1, max(tangent.degrees) + 3):
        expected = sum(max(0, a + k + 1) for a in tangent.degrees) + k + 1
        assert section_count(gradient_row, k) == expected, k


def test_splitting_flags():
    ruling = SplittingType((0, 2))
    assert ruling.degrees == (2, 0)
    assert ruling.free and not ruling.very_free and ruling.positive_count == 1
    assert str(ruling) == "O(2) ⊕ O(0)"
    rigid = SplittingType((2, -1))
    assert not rigid.free and rigid.positive_count == 1
    assert SplittingType((2, 1, 1)).very_free
    assert rigid.to_dict()["degrees"] == [2, -1]


def test_reparametrization_invariance():
    hypersurface = surface(FERMAT_CUBIC_SURFACE)
    line = curve("(s, -s, t, -t)")
    moved = line.reparametrize(2, 1, 1, 1)
    assert on_curve_check(hypersurface, moved)
    assert splitting_of_pullback_tangent(hypersurface, moved) == splitting_of_pullback_tangent(hypersurface, line)
    conic = curve("(s^2, s*t, t^2)")
    assert splitting_of_pullback_tangent_pn(2, conic.reparametrize(1, 3, 0, 1)).degrees == (3, 3)


def test_characteristic_p_fermat_guard():
    cases = [
        (2, 3, "(s, s, t, t)"),
        (3, 3, "(s, -s, t, -t)"),
        (3, 3, "(s + t, -s - t, t, -t)"),
        (5, 4, "(s, -s, t, -t, 0)"),
        (2, 4, "(s, s, t, t, 0)"),
    ]
    for p, n, phi in cases:
        fermat = " + ".join(f"x{i}^{p}" for i in range(n + 1))
        hypersurface = parse_hypersurface(f"{fermat} @ char {p}")
        line = curve(phi, hypersurface.field)
        assert on_curve_check(hypersurface, line)
        with pytest.raises(DegenerateGradientError, match="degenerate gradient along curve"):
            splitting_of_pullback_tangent(hypersurface, line)


def test_window_exhaustion_reports_diagnostics():
    koszul = FormMatrix.row(Q, [BinaryForm.from_values(Q, [0, 1]), BinaryForm.from_values(Q, [1, 0])], col_degrees=[1, 1])
    tight = SplittingSettings(window_slack=0, max_extensions=0)
    with pytest.raises(SplittingWindowError, match="h\\(1\\)=0"):
        kernel_splitting(koszul, rank=1, twist_sum=2, initial_span=0, settings=tight)
    found = kernel_splitting(koszul, rank=1, twist_sum=2, initial_span=0, settings=SplittingSettings(window_slack=0, max_extensions=3))
    assert found.twists == (2,)


# Evidence
def test_positive_rank_and_uniruledness_on_quadric():
    hypersurface = surface(QUADRIC_SURFACE)
    lines = [curve("(s, t, 0, 0)")]
    bound = positive_rank_lower_bound(hypersurface, lines)
    assert bound.bound == 1 and bound.witness == 0 and bound.maximal == (0,)
    evidence = uniruledness_evidence(hypersurface, lines)
    assert evidence.separably_uniruled.value == "yes" and evidence.witness == 0
    assert evidence.separably_rationally_connected.value == "unknown"


def test_rigid_lines_give_no_evidence():
    hypersurface = surface(FERMAT_CUBIC_SURFACE)
    lines = [curve("(s, -s, t, -t)")]
    assert positive_rank_lower_bound(hypersurface, lines).bound == 0
    assert positive_rank_lower_bound(hypersurface, lines).witness is None
    assert uniruledness_evidence(hypersurface, lines).separably_uniruled.value == "unknown"


def test_empty_curve_list():
    hypersurface = surface(QUADRIC_SURFACE)
    assert positive_rank_lower_bound(hypersurface, []).bound == 0
    assert uniruledness_evidence(hypersurface, []).separably_uniruled.value == "unknown"


def test_bad_curves_are_skipped():
    hypersurface = surface(QUADRIC_SURFACE)
    curves = [curve("(s, t, t, s)"), curve("(s, 0, t, 0)")]
    bound = positive_rank_lower_bound(hypersurface, curves)
    assert bound.bound == 1 and bound.witness == 1


def test_very_free_conic_witnesses_src():
    conic = parse_hypersurface("x0*x2 - x1^2 @ char 0")
    evidence = uniruledness_evidence(conic, [curve("(s^2, s*t, t^2)")])
    assert evidence.separably_rationally_connected.value == "yes"
    assert evidence.very_free_witness == 0


# Fuzzing
def _random_form(rng: random.Random, field: FieldSpec, degree: int) -> BinaryForm:
    return BinaryForm.from_values(field, [rng.randrange(field.characteristic) for _ in range(degree + 1)])


def _random_case(rng: random.Random) -> Optional[tuple]:
    """A random curve and a random hypersurface of degree d through it, or None if degenerate."""

    p = rng.choice((5, 7, 11))
    n = rng.randint(2, 4)
    d = rng.randint(2, 3)
    e = rng.randint(1, 2)
    field = FieldSpec(p)
    try:
        phi = RationalCurveMap(field, tuple(_random_form(rng, field, e) for _ in range(n + 1)))
    except CurveInputError:
        return None
    xs = ambient_symbols(n)
    monomials: List[tuple] = []
    for combo in combinations_with_replacement(range(n + 1), d):
        monomials.append(tuple(combo.count(i) for i in range(n + 1)))
    columns = []
    for exponents in monomials:
        value = compose(Poly.from_dict({exponents: 1}, *xs, domain=field.domain), phi)
        columns.append(list(value.coeffs))
    rows = [[column[r] for column in columns] for r in range(d * e + 1)]
    kernel = nullspace_vectors(field, rows, len(monomials))
    if not kernel:
        return None
    combination = [field.zero] * len(monomials)
    for vector in kernel:
        weight = field.convert(rng.randrange(p))
        combination = [a + weight * b for a, b in zip(combination, vector)]
    rep = {m: c for m, c in zip(monomials, combination) if c != field.zero}
    if not rep:
        return None
    hypersurface = HypersurfaceForm(n, Poly.from_dict(rep, *xs, domain=field.domain), field)
    if singularity_probe_along(hypersurface, phi) is not ProbeResult.OK:
        return None
    return hypersurface, phi


def test_fuzz_conservation_and_reparametrization():
    rng = random.Random(20240517)
    passed = 0
    attempts = 0
    while passed < 200:
        attempts += 1
        assert attempts < 5000, "fuzzer could not produce enough smooth cases"
        case = _random_case(rng)
        if case is None:
            continue
        hypersurface, phi = case
        splitting = splitting_of_pullback_tangent(hypersurface, phi)
        assert splitting.rank == hypersurface.n - 1
        assert splitting.degree == phi.degree * (hypersurface.n + 1 - hypersurface.degree)
        p = hypersurface.field.characteristic
        while True:
            a, b, c, d = (rng.randrange(p) for _ in range(4))
            if (a * d - b * c) % p:
                break
        assert splitting_of_pullback_tangent(hypersurface, phi.reparametrize(a, b, c, d)) == splitting
        passed += 1
