# Path: core/stability/slopes.py
# Purpose: Fano and exceptional-case classification, slopes against O(1) and the stability verdict for Omega_X.
# Layer: core/stability.
# Details: The verdict is only "stable" when every subsheaf ceiling it relies on carries vanishing certificates.

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, Tuple

from loguru import logger

from core.models.domain import CompleteIntersectionSpec
from core.vanish.certificates import VanishingOutcome
from core.vanish.engine import verify_vanishing
from core.vanish.rules import VanishingClaim


class Exceptional(str, Enum):
    NONE = "none"
    LINEAR = "linear"
    QUADRIC = "quadric"


class StabilityVerdict(str, Enum):
    STABLE = "stable"
    EXCLUDED_EXCEPTIONAL = "excluded-exceptional"
    NOT_APPLICABLE = "not-applicable"


def render_rational(value: Fraction) -> str:
    """Canonical "p/q" rendering used in JSON output."""

    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class SubsheafCeiling:
    """Largest slope a rank-r reflexive subsheaf of Omega_X can have, with the vanishings behind it.

    det F = O(k) is a subsheaf of Omega^r, so H^0(Omega^r(-k)) != 0; vanishing for all -k < r forces
    k <= -r and hence mu(F) = k deg X / r <= -deg X.
    """

    rank: int
    ceiling: Fraction
    outcomes: Tuple[VanishingOutcome, ...]

    @property
    def certified(self) -> bool:
        return all(o.certified for o in self.outcomes)

    def to_dict(self, include_certificates: bool = False) -> Dict:
        payload: Dict = {
            "rank": self.rank,
            "ceiling": render_rational(self.ceiling),
            "certified": self.certified,
            "twists": [o.claim.query.t for o in self.outcomes],
        }
        if include_certificates:
            payload["outcomes"] = [o.to_dict() for o in self.outcomes]
        return payload


def subsheaf_slope_ceiling(spec: CompleteIntersectionSpec, r: int) -> SubsheafCeiling:
    """Return -deg X together with certificates for H^0(X, Omega^r(t)) = 0, t = r-1, ..., 0, -1."""

    if not 1 <= r < spec.dim:
        raise ValueError(f"Subsheaf rank must satisfy 1 <= r < dim X = {spec.dim}, got {r}.")
    outcomes = tuple(verify_vanishing(VanishingClaim.top(spec, 0, r, t)) for t in range(r - 1, -2, -1))
    return SubsheafCeiling(rank=r, ceiling=Fraction(-spec.degree), outcomes=outcomes)


@dataclass(frozen=True)
class SlopeReport:
    """Slope data of Omega_X with respect to H = O(1)."""

    spec: CompleteIntersectionSpec
    degree: int
    fano: bool
    exceptional: Exceptional
    canonical_twist: int
    mu_omega: Fraction
    subsheaf_slope_bound: Fraction
    verdict: StabilityVerdict
    reason: str = ""
    ceilings: Tuple[SubsheafCeiling, ...] = field(default=(), compare=False)

    def to_dict(self, include_certificates: bool = False) -> Dict:
        return {
            "spec": self.spec.to_dict(),
            "dim": self.spec.dim,
            "degree": self.degree,
            "fano": self.fano,
            "exceptional": self.exceptional.value,
            "canonical_twist": self.canonical_twist,
            "mu_omega": render_rational(self.mu_omega),
            "subsheaf_slope_bound": render_rational(self.subsheaf_slope_bound),
            "verdict": self.verdict.value,
            "reason": self.reason,
            "ceilings": [c.to_dict(include_certificates) for c in self.ceilings],
        }


def classify_exceptional(spec: CompleteIntersectionSpec) -> Exceptional:
    if spec.codim == 0:
        return Exceptional.LINEAR
    if spec.codim == 1 and spec.degrees[0] == 2:
        return Exceptional.QUADRIC
    return Exceptional.NONE


def is_fano(spec: CompleteIntersectionSpec) -> bool:
    """omega_X = O(sum d_i - n - 1) is anti-ample iff sum d_i <= n."""

    return spec.degree_sum <= spec.ambient_dim


def slope_report(spec: CompleteIntersectionSpec) -> SlopeReport:
    """Compute the slope report and stability verdict for Omega_X.

    External calls:
    - core/stability/slopes.py::subsheaf_slope_ceiling - one certified ceiling per proper rank.
    """

    fano = is_fano(spec)
    exceptional = classify_exceptional(spec)
    mu_omega = Fraction(spec.degree * spec.canonical_twist, spec.dim)
    bound = Fraction(-spec.degree)

    def build(verdict: StabilityVerdict, reason: str, ceilings: Tuple[SubsheafCeiling, ...] = ()) -> SlopeReport:
        return SlopeReport(
            spec=spec,
            degree=spec.degree,
            fano=fano,
            exceptional=exceptional,
            canonical_twist=spec.canonical_twist,
            mu_omega=mu_omega,
            subsheaf_slope_bound=bound,
            verdict=verdict,
            reason=reason,
            ceilings=ceilings,
        )

    if not fano:
        return build(StabilityVerdict.NOT_APPLICABLE, "not Fano")
    if spec.dim < 3:
        return build(StabilityVerdict.NOT_APPLICABLE, "dim < 3")
    if exceptional is not Exceptional.NONE:
        return build(StabilityVerdict.EXCLUDED_EXCEPTIONAL, exceptional.value)
    if spec.degree_sum - 1 - spec.codim <= 0:
        return build(StabilityVerdict.NOT_APPLICABLE, "sum d_i - 1 - c <= 0")

    ceilings = tuple(subsheaf_slope_ceiling(spec, r) for r in range(1, spec.dim))
    if not all(c.certified for c in ceilings):
        logger.warning("Vanishing certificates missing for {}; verdict withheld", spec.label())
        return build(StabilityVerdict.NOT_APPLICABLE, "vanishing not certified", ceilings)
    if not all(c.ceiling < mu_omega for c in ceilings):
        return build(StabilityVerdict.NOT_APPLICABLE, "slope inequality fails", ceilings)
    return build(StabilityVerdict.STABLE, "", ceilings)


__all__ = [
    "Exceptional",
    "SlopeReport",
    "StabilityVerdict",
    "SubsheafCeiling",
    "classify_exceptional",
    "is_fano",
    "render_rational",
    "slope_report",
    "subsheaf_slope_ceiling",
]
