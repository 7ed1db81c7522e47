# Path: core/curves/__init__.py
# Purpose: Package initializer for rational curves on hypersurfaces and their splitting types.
# Layer: core/curves.
# Details: Exposes input parsing, the smoothness probes, splitting computations and curve evidence.

from .evidence import (
    CurveAnalysis,
    PositiveRankBound,
    UniruledEvidence,
    analyze_curves,
    positive_rank_lower_bound,
    uniruledness_evidence,
)
from .hypersurfaces import (
    CurveInput,
    CurveInputError,
    HypersurfaceForm,
    RationalCurveMap,
    parse_curve,
    parse_hypersurface,
    parse_input,
)
from .probes import DegenerateGradientError, ProbeResult, gradient_along, on_curve_check, singularity_probe_along
from .splitting import (
    SplittingType,
    SplittingWindowError,
    splitting_of_pullback_cotangent,
    splitting_of_pullback_tangent,
    splitting_of_pullback_tangent_pn,
)

__all__ = [
    "CurveAnalysis",
    "CurveInput",
    "CurveInputError",
    "DegenerateGradientError",
    "HypersurfaceForm",
    "PositiveRankBound",
    "ProbeResult",
    "RationalCurveMap",
    "SplittingType",
    "SplittingWindowError",
    "UniruledEvidence",
    "analyze_curves",
    "gradient_along",
    "on_curve_check",
    "parse_curve",
    "parse_hypersurface",
    "parse_input",
    "positive_rank_lower_bound",
    "singularity_probe_along",
    "splitting_of_pullback_cotangent",
    "splitting_of_pullback_tangent",
    "splitting_of_pullback_tangent_pn",
    "uniruledness_evidence",
]
