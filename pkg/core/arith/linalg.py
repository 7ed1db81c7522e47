# Path: core/arith/linalg.py
# Purpose: Exact linear algebra over Q or F_p and the degree-by-degree kernel of graded form matrices.
# Layer: core/arith.
# Details: Echelon forms come from sympy DomainMatrix.rref; pivots are chosen left to right so bases are reproducible.

from __future__ import annotations

from typing import Any, Dict, List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from .fields import FieldSpec
from .forms import BinaryForm, FormMatrix

Vector = List[Any]


def row_reduce(field: FieldSpec, rows: Sequence[Sequence[Any]], ncols: int) -> Tuple[List[Vector], Tuple[int, ...]]:
    """Return the reduced row echelon form (nonzero rows only) and its pivot columns."""

    if not rows or ncols == 0:
        return [], ()
    matrix = DomainMatrix([list(r) for r in rows], (len(rows), ncols), field.domain)
    reduced, pivots = matrix.rref()
    dense = reduced.to_Matrix()
    echelon = [[field.convert(dense[i, j]) for j in range(ncols)] for i in range(len(pivots))]
    return echelon, tuple(pivots)


def rank(field: FieldSpec, rows: Sequence[Sequence[Any]], ncols: int) -> int:
    return len(row_reduce(field, rows, ncols)[1])


def nullspace_vectors(field: FieldSpec, rows: Sequence[Sequence[Any]], ncols: int) -> List[Vector]:
    """Basis of {x : A x = 0}, one vector per free column with a 1 in that column.

    Free columns are visited in increasing order, which fixes the normalization.
    """

    echelon, pivots = row_reduce(field, rows, ncols)
    pivot_set = set(pivots)
    basis: List[Vector] = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vector = [field.zero] * ncols
        vector[free] = field.one
        for r, pivot in enumerate(pivots):
            vector[pivot] = -echelon[r][free]
        basis.append(vector)
    return basis


def solve(field: FieldSpec, rows: Sequence[Sequence[Any]], rhs: Sequence[Any], ncols: int) -> Optional[Vector]:
    """One solution of A x = b (free variables set to 0), or None if inconsistent."""

    augmented = [list(r) + [b] for r, b in zip(rows, rhs)]
    echelon, pivots = row_reduce(field, augmented, ncols + 1)
    if ncols in pivots:
        return None
    solution = [field.zero] * ncols
    for r, pivot in enumerate(pivots):
        solution[pivot] = echelon[r][ncols]
    return solution


def independent_subset(field: FieldSpec, span: Sequence[Vector], candidates: Sequence[Vector], ncols: int) -> List[int]:
    """Indices of candidates that extend ``span`` to a larger subspace, chosen greedily in order.

    Vectors become columns of one matrix; pivot columns of its echelon form are exactly the vectors
    independent of everything to their left.
    """

    vectors = [list(v) for v in span] + [list(c) for c in candidates]
    if not candidates or ncols == 0:
        return []
    columns = [[vector[r] for vector in vectors] for r in range(ncols)]
    _, pivots = row_reduce(field, columns, len(vectors))
    return [p - len(span) for p in pivots if p >= len(span)]


# Graded kernels
def solution_degrees(matrix: FormMatrix, twist: int) -> Tuple[int, ...]:
    """Degree of each solution entry at this twist: twist - col_degrees[j] (negative means forced zero)."""

    return tuple(twist - c for c in matrix.col_degrees)


def _unknown_layout(degrees: Sequence[int]) -> Tuple[List[int], int]:
    offsets: List[int] = []
    total = 0
    for degree in degrees:
        offsets.append(total)
        total += degree + 1 if degree >= 0 else 0
    return offsets, total


def kernel_system(matrix: FormMatrix, twist: int) -> Tuple[List[Vector], int]:
    """Coefficient equations for M g = 0 with g_j of degree twist - col_degrees[j].

    Unknowns are the coefficients of each g_j in s-power order; equations are indexed by
    (row, monomial of degree twist - row_degrees[i]).
    """

    field = matrix.field
    degrees = solution_degrees(matrix, twist)
    offsets, total = _unknown_layout(degrees)
    equations: Dict[Tuple[int, int], Vector] = {}
    for i, row in enumerate(matrix.entries):
        target = twist - matrix.row_degrees[i]
        if target < 0:
            continue
        for j, entry in enumerate(row):
            if entry.is_zero or degrees[j] < 0:
                continue
            for a, coefficient in enumerate(entry.coeffs):
                if coefficient == field.zero:
                    continue
                for k in range(degrees[j] + 1):
                    key = (i, a + k)
                    equation = equations.setdefault(key, [field.zero] * total)
                    equation[offsets[j] + k] += coefficient
    ordered = [equations[key] for key in sorted(equations)]
    return ordered, total


def vector_to_forms(field: FieldSpec, vector: Sequence[Any], degrees: Sequence[int]) -> Tuple[BinaryForm, ...]:
    """Split a coefficient vector into one form per column; negative degrees yield degree-0 zeros."""

    offsets, _ = _unknown_layout(degrees)
    forms: List[BinaryForm] = []
    for offset, degree in zip(offsets, degrees):
        if degree < 0:
            forms.append(BinaryForm.zero(field, 0))
            continue
        forms.append(BinaryForm(field, degree, tuple(vector[offset : offset + degree + 1])))
    return tuple(forms)


def forms_to_vector(field: FieldSpec, forms: Sequence[BinaryForm], degrees: Sequence[int]) -> Vector:
    """Inverse of :func:`vector_to_forms` for forms of the prescribed degrees."""

    vector: Vector = []
    for form, degree in zip(forms, degrees):
        if degree < 0:
            if not form.is_zero:
                raise ValueError("A nonzero form was placed in a negative-degree slot.")
            continue
        if form.is_zero:
            vector.extend([field.zero] * (degree + 1))
        elif form.degree != degree:
            raise ValueError(f"Form of degree {form.degree} placed in a degree-{degree} slot.")
        else:
            vector.extend(form.coeffs)
    return vector


def nullspace_by_degree(matrix: FormMatrix, twist: int) -> List[Tuple[BinaryForm, ...]]:
    """Basis of the degree-``twist`` part of ker M as tuples of forms.

    Entry j of each tuple has degree twist - col_degrees[j]; slots with negative degree are
    identically zero. The basis is deterministic (left-to-right pivoting, free-column normalization).
    """

    equations, total = kernel_system(matrix, twist)
    if total == 0:
        return []
    degrees = solution_degrees(matrix, twist)
    return [vector_to_forms(matrix.field, v, degrees) for v in nullspace_vectors(matrix.field, equations, total)]


def section_count(matrix: FormMatrix, twist: int) -> int:
    """Dimension of the degree-``twist`` part of ker M."""

    equations, total = kernel_system(matrix, twist)
    if total == 0:
        return 0
    return total - rank(matrix.field, equations, total)


__all__ = [
    "forms_to_vector",
    "independent_subset",
    "kernel_system",
    "nullspace_by_degree",
    "nullspace_vectors",
    "rank",
    "row_reduce",
    "section_count",
    "solution_degrees",
    "solve",
    "vector_to_forms",
]
