# Path: tests/test_arith.py
# Purpose: Exact arithmetic: binomials, base fields, binary forms and graded kernels.
# Layer: tests.
# Details: Kernel dimensions are checked against hand-computed splittings on P^1.

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from core.arith import BinaryForm, FieldSpec, FormDegreeError, FormMatrix, binom, have_common_zero, nullspace_by_degree, section_count
from core.arith.linalg import forms_to_vector, independent_subset, rank, solve

Q = FieldSpec()
F5 = FieldSpec(5)


def form(field: FieldSpec, *values: int) -> BinaryForm:
    return BinaryForm.from_values(field, list(values))


@pytest.mark.parametrize(
    "a,b,expected",
    [(5, 2, 10), (0, 0, 1), (3, 5, 0), (4, -1, 0), (-1, 0, 0), (10, 10, 1), (12, 6, 924)],
)
def test_binom_examples(a, b, expected):
    assert binom(a, b) == expected


def test_binom_pascal():
    for a in range(1, 15):
        for b in range(1, a + 1):
            assert binom(a, b) == binom(a - 1, b - 1) + binom(a - 1, b)


def test_field_validation():
    with pytest.raises(ValueError):
        FieldSpec(4)
    with pytest.raises(ValueError):
        FieldSpec(-3)
    assert FieldSpec(7).describe() == "F_7"
    assert Q.describe() == "Q"


def test_field_conversion():
    f7 = FieldSpec(7)
    half = f7.convert(Fraction(1, 2))
    assert half * f7.convert(2) == f7.one
    assert f7.to_python(f7.convert(-1)) == 6
    assert Q.to_python(Q.convert(Fraction(3, 4))) == Fraction(3, 4)
    assert Q.to_python(Q.convert(5)) == 5


def test_form_product_and_power():
    s_plus_t = form(Q, 1, 1)
    s_minus_t = form(Q, -1, 1)
    product = s_plus_t * s_minus_t
    assert product.degree == 2
    assert product.values() == [-1, 0, 1]  # s^2 - t^2
    assert s_plus_t.power(2).values() == [1, 2, 1]
    assert s_plus_t.power(0).values() == [1]


def test_form_arithmetic_in_characteristic_p():
    s_plus_t = form(F5, 1, 1)
    assert s_plus_t.power(5).values() == [1, 0, 0, 0, 0, 1]  # Frobenius
    assert (s_plus_t.scale(5)).is_zero


def test_form_degree_mismatch():
    with pytest.raises(FormDegreeError):
        form(Q, 1, 1) + form(Q, 1, 0, 1)
    with pytest.raises(FormDegreeError):
        BinaryForm(Q, 2, (Q.one,))


def test_substitute_swaps_variables():
    s_squared = BinaryForm.monomial(Q, 2, 2)
    swapped = s_squared.substitute(0, 1, 1, 0)  # s -> t, t -> s
    assert swapped.values() == [1, 0, 0]


@pytest.mark.parametrize(
    "forms,expected",
    [
        ([(0, 1), (1, 0)], False),  # s, t
        ([(0, 0, 1), (0, 1, 0)], True),  # s^2, st share s = 0
        ([(1, 0), (0, 0)], True),  # t with a zero form
        ([(0, 0)], True),
        ([(1, 0, 1), (1, 1)], False),  # s^2 + t^2, s + t over Q
    ],
)
def test_have_common_zero(forms, expected):
    assert have_common_zero([form(Q, *values) for values in forms]) is expected


def test_common_zero_depends_on_characteristic():
    # s^2 + t^2 = (s + 2t)(s + 3t) over F_5
    assert have_common_zero([form(F5, 1, 0, 1), form(F5, 2, 1)])
    assert not have_common_zero([form(Q, 1, 0, 1), form(Q, 2, 1)])


def test_form_matrix_validates_degrees():
    with pytest.raises(FormDegreeError):
        FormMatrix.row(Q, [form(Q, 0, 1), form(Q, 1, 0, 0)], col_degrees=[1, 1])
    matrix = FormMatrix.row(Q, [form(Q, 0, 1), BinaryForm.zero(Q, 0)], col_degrees=[1, 5])
    assert matrix.shape == (1, 2)


def test_koszul_kernel_sections():
    # ker (s t): O(-1)^2 -> O is O(-2), so h(m) = max(0, m - 1).
    matrix = FormMatrix.row(Q, [form(Q, 0, 1), form(Q, 1, 0)], col_degrees=[1, 1])
    assert [section_count(matrix, m) for m in range(0, 6)] == [0, 0, 1, 2, 3, 4]
    (basis,) = nullspace_by_degree(matrix, 2)
    relation = basis[0] * form(Q, 0, 1) + basis[1] * form(Q, 1, 0)
    assert relation.is_zero


def test_section_counts_invariant_under_column_permutation():
    rng = random.Random(11)
    for _ in range(10):
        forms = [BinaryForm.from_values(F5, [rng.randrange(5) for _ in range(3)]) for _ in range(3)]
        if all(f.is_zero for f in forms):
            continue
        order = [2, 0, 1]
        matrix = FormMatrix.row(F5, forms, col_degrees=[2, 2, 2])
        permuted = FormMatrix.row(F5, [forms[i] for i in order], col_degrees=[2, 2, 2])
        for m in range(2, 7):
            assert section_count(matrix, m) == section_count(permuted, m)


def test_nullspace_elements_are_in_kernel():
    matrix = FormMatrix.row(F5, [form(F5, 1, 0, 1), form(F5, 0, 1, 0), form(F5, 0, 0, 1)], col_degrees=[2, 2, 2])
    for twist in range(2, 6):
        for section in nullspace_by_degree(matrix, twist):
            total = BinaryForm.zero(F5, twist)
            for entry, value in zip(matrix.entries[0], section):
                total = total + entry * value
            assert total.is_zero


def test_solve_and_rank():
    rows = [[Q.convert(1), Q.convert(2)], [Q.convert(2), Q.convert(4)]]
    assert rank(Q, rows, 2) == 1
    assert solve(Q, rows, [Q.convert(1), Q.convert(3)], 2) is None
    solution = solve(Q, rows, [Q.convert(1), Q.convert(2)], 2)
    assert solution is not None
    assert solution[0] + 2 * solution[1] == Q.convert(1)


def test_independent_subset_skips_dependent_candidates():
    e1 = [Q.one, Q.zero, Q.zero]
    e2 = [Q.zero, Q.one, Q.zero]
    e12 = [Q.one, Q.one, Q.zero]
    assert independent_subset(Q, [e1], [e12, e2, e1], 3) == [0]


def test_forms_to_vector_rejects_misplaced_forms():
    with pytest.raises(ValueError):
        forms_to_vector(Q, [form(Q, 1, 1)], [-1])
    assert forms_to_vector(Q, [BinaryForm.zero(Q, 0)], [2]) == [Q.zero] * 3
