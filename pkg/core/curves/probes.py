# Path: core/curves/probes.py
# Purpose: Preconditions for splitting computations: the curve lies on X and X is smooth along it.
# Layer: core/curves.
# Details: Gradients use formal partial derivatives, so in characteristic p dividing d they may vanish identically.

from __future__ import annotations

from enum import Enum
from typing import Tuple

from core.arith.forms import BinaryForm, have_common_zero

from .hypersurfaces import CurveInputError, HypersurfaceForm, RationalCurveMap, compose


class DegenerateGradientError(ValueError):
    """Raised when the gradient of F vanishes somewhere along the curve."""


class ProbeResult(str, Enum):
    OK = "ok"
    DEGENERATE = "degenerate"


def _check_compatible(hypersurface: HypersurfaceForm, curve: RationalCurveMap) -> None:
    if curve.field != hypersurface.field:
        raise CurveInputError(
            f"Curve lives over {curve.field.describe()}, hypersurface over {hypersurface.field.describe()}."
        )
    if curve.n != hypersurface.n:
        raise CurveInputError(f"Curve maps to P^{curve.n}, hypersurface lives in P^{hypersurface.n}.")


def on_curve_check(hypersurface: HypersurfaceForm, curve: RationalCurveMap) -> bool:
    """True iff F(phi_0, ..., phi_n) is the zero form."""

    _check_compatible(hypersurface, curve)
    return compose(hypersurface.poly, curve).is_zero


def gradient_along(hypersurface: HypersurfaceForm, curve: RationalCurveMap) -> Tuple[BinaryForm, ...]:
    """G_i = (dF/dx_i)(phi) as forms of degree e(d-1); identically zero partials give zero forms."""

    _check_compatible(hypersurface, curve)
    degree = (hypersurface.degree - 1) * curve.degree
    gradient = []
    for partial in hypersurface.partials:
        form = compose(partial, curve)
        gradient.append(form if not form.is_zero else BinaryForm.zero(curve.field, degree))
    return tuple(gradient)


def singularity_probe_along(hypersurface: HypersurfaceForm, curve: RationalCurveMap) -> ProbeResult:
    if not on_curve_check(hypersurface, curve):
        raise CurveInputError(f"Curve {curve} does not lie on F = 0.")
    gradient = gradient_along(hypersurface, curve)
    # have_common_zero is True when every G_i vanishes identically.
    if have_common_zero(gradient):
        return ProbeResult.DEGENERATE
    return ProbeResult.OK


def require_smooth_along(hypersurface: HypersurfaceForm, curve: RationalCurveMap) -> Tuple[BinaryForm, ...]:
    """Return the gradient along the curve, raising unless the curve lies on X and X is smooth along it."""

    if singularity_probe_along(hypersurface, curve) is ProbeResult.DEGENERATE:
        raise DegenerateGradientError(f"degenerate gradient along curve {curve}")
    return gradient_along(hypersurface, curve)


__all__ = [
    "DegenerateGradientError",
    "ProbeResult",
    "gradient_along",
    "on_curve_check",
    "require_smooth_along",
    "singularity_probe_along",
]
