# Path: core/arith/__init__.py
# Purpose: Package initializer for the exact arithmetic substrate.
# Layer: core/arith.
# Details: Exposes binomials, base fields, binary forms and graded kernel linear algebra.

from .binomials import binom
from .fields import FieldSpec
from .forms import BinaryForm, FormDegreeError, FormMatrix, have_common_zero
from .linalg import nullspace_by_degree, section_count

__all__ = [
    "BinaryForm",
    "FieldSpec",
    "FormDegreeError",
    "FormMatrix",
    "binom",
    "have_common_zero",
    "nullspace_by_degree",
    "section_count",
]
