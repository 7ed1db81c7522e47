# Path: tests/test_projective.py
# Purpose: Bott dimensions on P^n and line-bundle cohomology on complete intersections.
# Layer: tests.

from __future__ import annotations

import pytest

from core.arith import binom
from core.models import CohomologyQuery, CompleteIntersectionSpec
from core.projective import (
    bott_dimension,
    chi_line_bundle_pn,
    euler_characteristic_omega,
    hilbert_h0,
    line_bundle_cohomology,
    line_bundle_euler_characteristic,
)


@pytest.mark.parametrize(
    "n,p,q,t,expected",
    [
        (2, 0, 1, 2, 3),
        (3, 1, 1, 0, 1),
        (3, 9, 1, 0, 0),
        (1, 0, 1, 5, 4),  # Omega_{P^1} = O(-2)
        (1, 1, 1, -1, 2),  # Omega(-1) = O(-3)
        (2, 2, 0, -3, 1),  # h^2(O(-3)) on P^2
        (4, 0, 0, 2, 15),
    ],
)
def test_bott_examples(n, p, q, t, expected):
    assert bott_dimension(n, CohomologyQuery(p, q, t)) == expected


def test_bott_rejects_bad_input():
    with pytest.raises(ValueError):
        bott_dimension(0, CohomologyQuery(0, 0, 0))
    with pytest.raises(ValueError):
        CohomologyQuery(-1, 0, 0)
    with pytest.raises(ValueError):
        euler_characteristic_omega(0, 0, 0)


def test_bott_serre_duality():
    for n in range(1, 7):
        for p in range(n + 1):
            for q in range(n + 1):
                for t in range(-12, 13):
                    left = bott_dimension(n, CohomologyQuery(p, q, t))
                    right = bott_dimension(n, CohomologyQuery(n - p, n - q, -t))
                    assert left == right, (n, p, q, t)


def test_bott_alternating_sum_matches_euler_resolution():
    for n in range(1, 6):
        for q in range(n + 1):
            for t in range(-10, 11):
                alternating = sum((-1) ** p * bott_dimension(n, CohomologyQuery(p, q, t)) for p in range(n + 1))
                assert alternating == euler_characteristic_omega(n, q, t), (n, q, t)


def test_chi_line_bundle_on_pn():
    for n in range(1, 6):
        for t in range(-10, 11):
            if t >= 0:
                expected = binom(t + n, n)
            else:
                expected = (-1) ** n * binom(-t - 1, n)
            assert chi_line_bundle_pn(n, t) == expected


@pytest.mark.parametrize(
    "n,degrees,t,expected",
    [
        (3, (3,), 1, 4),
        (3, (3,), 0, 1),
        (5, (2, 2), 0, 1),
        (3, (2,), 2, 9),
        (3, (3,), 3, 19),
        (4, (3,), 1, 5),
        (5, (2, 3), -1, 0),
    ],
)
def test_hilbert_h0_examples(n, degrees, t, expected):
    assert hilbert_h0(CompleteIntersectionSpec(n, degrees), t) == expected


@pytest.mark.parametrize(
    "n,degrees,p,t,expected",
    [
        (4, (3,), 3, -3, 5),
        (3, (2,), 1, -7, 0),
        (5, (2, 2), 0, -1, 0),
        (3, (), 3, -4, 1),
    ],
)
def test_line_bundle_cohomology_examples(n, degrees, p, t, expected):
    assert line_bundle_cohomology(CompleteIntersectionSpec(n, degrees), p, t) == expected


def test_hilbert_h0_is_nondecreasing():
    for spec in (CompleteIntersectionSpec(3, (3,)), CompleteIntersectionSpec(5, (2, 3)), CompleteIntersectionSpec(6, (2, 2, 2))):
        values = [hilbert_h0(spec, t) for t in range(0, 12)]
        assert values == sorted(values)


def test_euler_characteristic_is_polynomial_with_expected_leading_term():
    for spec in (CompleteIntersectionSpec(3, (2,)), CompleteIntersectionSpec(4, (3,)), CompleteIntersectionSpec(5, (2, 2))):
        dim = spec.dim
        values = [line_bundle_euler_characteristic(spec, t) for t in range(-8, 9)]
        for t, value in zip(range(-8, 9), values):
            alternating = sum((-1) ** p * line_bundle_cohomology(spec, p, t) for p in range(dim + 1))
            assert value == alternating
        # The dim-th finite difference of a degree-dim polynomial is dim! times its leading coefficient.
        diffs = values
        for _ in range(dim):
            diffs = [b - a for a, b in zip(diffs, diffs[1:])]
        assert set(diffs) == {spec.degree}


def test_spec_validation_and_normalization():
    with pytest.raises(ValueError, match="hyperplane"):
        CompleteIntersectionSpec(4, (1, 3))
    with pytest.raises(ValueError):
        CompleteIntersectionSpec(2, (2, 2))
    spec = CompleteIntersectionSpec.normalized(5, [3, 2])
    assert spec.degrees == (2, 3)
    assert spec.canonical_twist == -1
    assert spec.degree == 6
    assert spec.prefix(1).degrees == (2,)
