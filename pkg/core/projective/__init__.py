# Path: core/projective/__init__.py
# Purpose: Package initializer for cohomology on projective space and complete intersections.
# Layer: core/projective.
# Details: Exposes the Bott oracle and line-bundle cohomology consumed by vanish, stability and the CLI.

from .bott import bott_dimension, chi_line_bundle_pn, euler_characteristic_omega
from .hilbert import hilbert_h0, line_bundle_cohomology, line_bundle_euler_characteristic

__all__ = [
    "bott_dimension",
    "chi_line_bundle_pn",
    "euler_characteristic_omega",
    "hilbert_h0",
    "line_bundle_cohomology",
    "line_bundle_euler_characteristic",
]
