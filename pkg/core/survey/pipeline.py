# Path: core/survey/pipeline.py
# Purpose: Run the slope report, range sweep and implication evaluator over every Fano multidegree in a box.
# Layer: core/survey.
# Details: Rows are produced in (n, degrees) order; the user supplies what the library cannot decide
#          (separable uniruledness, free generation of N_1), everything else is derived per row.

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Dict, Iterator, List, Optional

from loguru import logger
from tqdm import tqdm

from config.settings import SurveySettings, VanishSettings
from core.models.domain import CompleteIntersectionSpec
from core.stability.implications import ImplicationInput, ImplicationVerdict, Tri, implication_verdict
from core.stability.slopes import SlopeReport, StabilityVerdict, is_fano, slope_report
from core.vanish.engine import SweepStatus, summarize_sweep, sweep_range


@dataclass(frozen=True)
class SurveyRow:
    """Everything the survey reports about one complete intersection."""

    spec: CompleteIntersectionSpec
    report: SlopeReport
    sweep: SweepStatus
    implication: ImplicationVerdict

    def to_dict(self) -> Dict:
        report = self.report.to_dict()
        report.pop("ceilings")
        return {
            **report,
            "sweep": {
                "status": self.sweep.describe(),
                "total": self.sweep.total,
                "certified": self.sweep.certified,
            },
            "implication": self.implication.to_dict(),
        }

    def describe(self) -> str:
        verdict = self.report.verdict.value
        if self.report.reason:
            verdict = f"{verdict} ({self.report.reason})"
        return (
            f"{self.spec.label():<22} dim={self.spec.dim} deg={self.report.degree:<3} "
            f"{verdict:<34} {self.sweep.describe():<32} src={self.implication.src.value}"
        )


def iter_fano_specs(nmax: int, dmax: int, cmax: int) -> Iterator[CompleteIntersectionSpec]:
    """Normalized Fano specs with n <= nmax, 2 <= d_i <= dmax, c <= cmax and dim >= 1, by (n, degrees)."""

    for n in range(1, nmax + 1):
        specs = []
        for c in range(0, min(cmax, n - 1) + 1):
            for degrees in combinations_with_replacement(range(2, dmax + 1), c):
                spec = CompleteIntersectionSpec(n, degrees)
                if is_fano(spec):
                    specs.append(spec)
        yield from sorted(specs, key=lambda s: s.degrees)


class SurveyPipeline:
    """Batch driver behind the survey command."""

    def __init__(
        self,
        settings: Optional[SurveySettings] = None,
        vanish_settings: Optional[VanishSettings] = None,
        separably_uniruled: Tri = Tri.UNKNOWN,
        n1_generated_by_free: Tri = Tri.UNKNOWN,
        progress: bool = False,
    ) -> None:
        self.settings = settings or SurveySettings()
        self.vanish_settings = vanish_settings or VanishSettings()
        self.separably_uniruled = Tri.parse(separably_uniruled)
        self.n1_generated_by_free = Tri.parse(n1_generated_by_free)
        self.progress = progress

    def evaluate(self, spec: CompleteIntersectionSpec) -> SurveyRow:
        """
        Build the row for one spec.

        External calls:
        - core/stability/slopes.py::slope_report - verdict and slopes.
        - core/vanish/engine.py::sweep_range - certificates for the whole range down to t_min.
        - core/stability/implications.py::implication_verdict - SRC verdict from the derived facts.
        """

        report = slope_report(spec)
        sweep = summarize_sweep(sweep_range(spec, self.settings.t_min, self.vanish_settings))
        stable = report.verdict is StabilityVerdict.STABLE
        facts = ImplicationInput(
            # Lefschetz: Pic X = Z for complete intersections of dimension >= 3.
            picard_rank_one=spec.dim >= 3,
            separably_uniruled=self.separably_uniruled,
            tangent_stable=Tri.YES if stable else Tri.UNKNOWN,
            fano=report.fano,
            n1_generated_by_free=self.n1_generated_by_free,
            fano_complete_intersection_dim3=report.fano and spec.dim >= 3,
        )
        return SurveyRow(spec=spec, report=report, sweep=sweep, implication=implication_verdict(facts))

    def run(self) -> List[SurveyRow]:
        specs = list(iter_fano_specs(self.settings.nmax, self.settings.dmax, self.settings.cmax))
        logger.info("Surveying {} specs", len(specs))
        return [self.evaluate(spec) for spec in tqdm(specs, desc="Survey", unit="spec", disable=not self.progress)]


__all__ = ["SurveyPipeline", "SurveyRow", "iter_fano_specs"]
