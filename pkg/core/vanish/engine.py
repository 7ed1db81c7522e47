# Path: core/vanish/engine.py
# Purpose: Search for vanishing certificates and sweep the full claimed range of a complete intersection.
# Layer: core/vanish.
# Details: verify_vanishing runs the inductive argument top-down through the rules in rules.py;
#          sweep_range batches claims, optionally over a thread pool, in a fixed enumeration order.

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Optional, Tuple

from loguru import logger
from tqdm import tqdm

from config.settings import VanishSettings
from core.models.domain import CohomologyQuery, CompleteIntersectionSpec

from .certificates import NotCertifiedReason, VanishingCertificate, VanishingOutcome
from .rules import LineBundleBase, VanishingClaim, select_rule

# Memo bound for verify_vanishing; subclaims repeat within a spec, rarely across specs.
CLAIM_CACHE_SIZE = 1 << 16


@lru_cache(maxsize=CLAIM_CACHE_SIZE)
def verify_vanishing(claim: VanishingClaim) -> VanishingOutcome:
    """Try to certify the claim; out-of-range claims are reported, never attempted.

    External calls:
    - core/vanish/rules.py::select_rule - picks the exact-sequence rule for the claim's shape.
    - core/projective/hilbert.py::line_bundle_cohomology - decides every leaf.
    """

    if not claim.in_range():
        logger.debug("Out of range: {}", claim.describe())
        return VanishingOutcome.not_certified(claim, NotCertifiedReason.OUT_OF_RANGE)

    rule = select_rule(claim)
    if isinstance(rule, LineBundleBase):
        dimension = rule.base_dimension(claim)
        if dimension != 0:
            return VanishingOutcome.not_certified(
                claim, NotCertifiedReason.RECURSION_FAILED, f"line bundle group has dimension {dimension}"
            )
        return VanishingOutcome.certified_by(VanishingCertificate(claim, rule.id, (), 0))

    if not rule.side_conditions_hold(claim):
        return VanishingOutcome.not_certified(
            claim, NotCertifiedReason.RECURSION_FAILED, f"side conditions of {rule.id.value} fail"
        )

    premises: List[VanishingCertificate] = []
    for premise in rule.premises(claim):
        if not premise.measure < claim.measure:
            raise RuntimeError(f"Recursion measure does not decrease from {claim.describe()} to {premise.describe()}.")
        outcome = verify_vanishing(premise)
        if not outcome.certified:
            logger.debug("{} failed at premise {}", claim.describe(), premise.describe())
            return VanishingOutcome.not_certified(
                claim, NotCertifiedReason.RECURSION_FAILED, f"premise {premise.describe()} not certified"
            )
        premises.append(outcome.certificate)
    return VanishingOutcome.certified_by(VanishingCertificate(claim, rule.id, tuple(premises)))


def default_t_min(spec: CompleteIntersectionSpec, margin: int = 5) -> int:
    """-(n + max d_i + margin); the range t < q - p is infinite downward so sweeps need a floor."""

    return -(spec.ambient_dim + max(spec.degrees, default=0) + margin)


def iter_range(spec: CompleteIntersectionSpec, t_min: int) -> Iterator[CohomologyQuery]:
    """All (p, q, t) with p + q < dim X and t_min <= t < q - p, ordered by (p, q, t)."""

    for p in range(spec.dim):
        for q in range(spec.dim - p):
            for t in range(t_min, q - p):
                yield CohomologyQuery(p, q, t)


def sweep_range(
    spec: CompleteIntersectionSpec,
    t_min: Optional[int] = None,
    settings: Optional[VanishSettings] = None,
    progress: bool = False,
) -> List[Tuple[CohomologyQuery, VanishingOutcome]]:
    """Verify every claim of the vanishing range with t >= t_min, in enumeration order."""

    settings = settings or VanishSettings()
    if t_min is None:
        t_min = default_t_min(spec, settings.t_min_margin)
    if t_min > -1:
        raise ValueError(f"t_min must be at most -1, got {t_min}.")

    queries = list(iter_range(spec, t_min))
    claims = [VanishingClaim(spec, spec.codim, query) for query in queries]
    logger.info("Sweeping {} claims on {}", len(claims), spec.label())

    if settings.workers > 1:
        with ThreadPoolExecutor(max_workers=settings.workers) as pool:
            outcomes = list(
                tqdm(pool.map(verify_vanishing, claims), total=len(claims), desc="Sweeping", disable=not progress)
            )
    else:
        outcomes = [verify_vanishing(c) for c in tqdm(claims, desc="Sweeping", unit="claim", disable=not progress)]
    return list(zip(queries, outcomes))


@dataclass(frozen=True)
class SweepStatus:
    """Summary of a sweep: all certified, or the first claim that was not."""

    total: int
    certified: int
    first_failure: Optional[CohomologyQuery] = None

    @property
    def all_certified(self) -> bool:
        return self.total == self.certified

    def describe(self) -> str:
        if self.all_certified:
            return "all-certified"
        q = self.first_failure
        return f"first-failure (p={q.p}, q={q.q}, t={q.t})"


def summarize_sweep(results: List[Tuple[CohomologyQuery, VanishingOutcome]]) -> SweepStatus:
    certified = sum(1 for _, outcome in results if outcome.certified)
    first_failure = next((query for query, outcome in results if not outcome.certified), None)
    return SweepStatus(total=len(results), certified=certified, first_failure=first_failure)


__all__ = [
    "CLAIM_CACHE_SIZE",
    "SweepStatus",
    "default_t_min",
    "iter_range",
    "summarize_sweep",
    "sweep_range",
    "verify_vanishing",
]
