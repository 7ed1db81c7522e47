# Path: core/stability/__init__.py
# Purpose: Package initializer for slope, stability and implication computations.
# Layer: core/stability.
# Details: Exposes the slope report, subsheaf ceilings and the implication evaluator.

from .implications import ImplicationInput, ImplicationVerdict, Tri, implication_verdict
from .slopes import (
    Exceptional,
    SlopeReport,
    StabilityVerdict,
    SubsheafCeiling,
    is_fano,
    render_rational,
    slope_report,
    subsheaf_slope_ceiling,
)

__all__ = [
    "Exceptional",
    "ImplicationInput",
    "ImplicationVerdict",
    "SlopeReport",
    "StabilityVerdict",
    "SubsheafCeiling",
    "Tri",
    "implication_verdict",
    "is_fano",
    "render_rational",
    "slope_report",
    "subsheaf_slope_ceiling",
]
