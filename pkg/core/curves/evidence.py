# Path: core/curves/evidence.py
# Purpose: Turn splitting types of supplied curves into evidence about positive rank and separable uniruledness.
# Layer: core/curves.
# Details: Curves that are off X or meet its singular locus are skipped with a warning rather than aborting a batch.

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger
from tqdm import tqdm

from config.settings import SplittingSettings
from core.stability.implications import Tri

from .hypersurfaces import CurveInputError, HypersurfaceForm, RationalCurveMap
from .probes import DegenerateGradientError
from .splitting import SplittingType, splitting_of_pullback_tangent


@dataclass(frozen=True)
class CurveAnalysis:
    """Outcome for one supplied curve: its splitting type, or why it was skipped."""

    index: int
    curve: RationalCurveMap
    splitting: Optional[SplittingType] = None
    skipped: str = ""

    def to_dict(self) -> Dict:
        return {
            "index": self.index,
            "curve": str(self.curve),
            "splitting": self.splitting.to_dict() if self.splitting else None,
            "skipped": self.skipped or None,
        }


def analyze_curves(
    hypersurface: HypersurfaceForm,
    curves: Sequence[RationalCurveMap],
    settings: Optional[SplittingSettings] = None,
    progress: bool = False,
) -> List[CurveAnalysis]:
    results: List[CurveAnalysis] = []
    for index, curve in enumerate(tqdm(curves, desc="Splitting", unit="curve", disable=not progress)):
        try:
            splitting = splitting_of_pullback_tangent(hypersurface, curve, settings)
        except (CurveInputError, DegenerateGradientError) as exc:
            logger.warning("Skipping curve #{} {}: {}", index, curve, exc)
            results.append(CurveAnalysis(index, curve, skipped=str(exc)))
            continue
        results.append(CurveAnalysis(index, curve, splitting))
    return results


@dataclass(frozen=True)
class PositiveRankBound:
    """Lower bound for the positive rank with the first curve that attains it."""

    bound: int
    witness: Optional[int] = None
    witness_splitting: Optional[SplittingType] = None
    maximal: Tuple[int, ...] = ()

    def to_dict(self) -> Dict:
        return {
            "bound": self.bound,
            "witness": self.witness,
            "witness_splitting": self.witness_splitting.to_dict() if self.witness_splitting else None,
            "maximal": list(self.maximal),
        }


def positive_rank_lower_bound(
    hypersurface: HypersurfaceForm,
    curves: Sequence[RationalCurveMap],
    settings: Optional[SplittingSettings] = None,
    analyses: Optional[Sequence[CurveAnalysis]] = None,
) -> PositiveRankBound:
    """Max of #{a_i > 0} over the free curves supplied; 0 with no witness when none is free."""

    analyses = analyses if analyses is not None else analyze_curves(hypersurface, curves, settings)
    free = [a for a in analyses if a.splitting is not None and a.splitting.free]
    if not free:
        return PositiveRankBound(bound=0)
    bound = max(a.splitting.positive_count for a in free)
    maximal = tuple(a.index for a in free if a.splitting.positive_count == bound)
    witness = next(a for a in free if a.index == maximal[0])
    return PositiveRankBound(bound=bound, witness=witness.index, witness_splitting=witness.splitting, maximal=maximal)


@dataclass(frozen=True)
class UniruledEvidence:
    """A free curve witnesses separable uniruledness; a very free one separable rational connectedness."""

    separably_uniruled: Tri
    witness: Optional[int] = None
    separably_rationally_connected: Tri = Tri.UNKNOWN
    very_free_witness: Optional[int] = None

    def to_dict(self) -> Dict:
        return {
            "separably_uniruled": self.separably_uniruled.value,
            "witness": self.witness,
            "separably_rationally_connected": self.separably_rationally_connected.value,
            "very_free_witness": self.very_free_witness,
        }


def uniruledness_evidence(
    hypersurface: HypersurfaceForm,
    curves: Sequence[RationalCurveMap],
    settings: Optional[SplittingSettings] = None,
    analyses: Optional[Sequence[CurveAnalysis]] = None,
) -> UniruledEvidence:
    analyses = analyses if analyses is not None else analyze_curves(hypersurface, curves, settings)
    free = [a for a in analyses if a.splitting is not None and a.splitting.free]
    very_free = [a for a in free if a.splitting.very_free]
    return UniruledEvidence(
        separably_uniruled=Tri.YES if free else Tri.UNKNOWN,
        witness=free[0].index if free else None,
        separably_rationally_connected=Tri.YES if very_free else Tri.UNKNOWN,
        very_free_witness=very_free[0].index if very_free else None,
    )


__all__ = [
    "CurveAnalysis",
    "PositiveRankBound",
    "UniruledEvidence",
    "analyze_curves",
    "positive_rank_lower_bound",
    "uniruledness_evidence",
]
