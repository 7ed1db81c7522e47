# Path: core/stability/implications.py
# Purpose: Evaluate the implications relating separable uniruledness, tangent stability and separable rational connectedness.
# Layer: core/stability.
# Details: Rules are plain data; a rule fires only when every premise is affirmatively known, so unknowns never yield yes.

from __future__ import annotations

from dataclasses import dataclass, fields
from enum import Enum
from typing import Dict, Optional, Tuple


class Tri(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    @classmethod
    def parse(cls, value: "Tri | str | bool | None") -> "Tri":
        if isinstance(value, Tri):
            return value
        if value is None:
            return cls.UNKNOWN
        if isinstance(value, bool):
            return cls.YES if value else cls.NO
        return cls(str(value).lower())


@dataclass(frozen=True)
class ImplicationInput:
    """What is known about X. Booleans are facts about X; Tri fields may be unknown."""

    picard_rank_one: bool = False
    separably_uniruled: Tri = Tri.UNKNOWN
    tangent_stable: Tri = Tri.UNKNOWN
    tangent_semistable: Tri = Tri.UNKNOWN
    fano: bool = False
    n1_generated_by_free: Tri = Tri.UNKNOWN
    fano_complete_intersection_dim3: bool = False

    def __post_init__(self) -> None:
        for name in ("separably_uniruled", "tangent_stable", "tangent_semistable", "n1_generated_by_free"):
            object.__setattr__(self, name, Tri.parse(getattr(self, name)))
        if self.tangent_stable is Tri.YES and self.tangent_semistable is Tri.NO:
            raise ValueError("Inconsistent input: a stable tangent sheaf is semistable.")
        if self.tangent_stable is Tri.YES:
            object.__setattr__(self, "tangent_semistable", Tri.YES)

    def value_of(self, name: str) -> str:
        value = getattr(self, name)
        if isinstance(value, bool):
            return "true" if value else "false"
        return value.value

    def to_dict(self) -> Dict:
        return {f.name: self.value_of(f.name) for f in fields(self)}


@dataclass(frozen=True)
class ImplicationRule:
    id: str
    description: str
    premises: Tuple[Tuple[str, str], ...]
    conclusion: Tri


RULES: Tuple[ImplicationRule, ...] = (
    ImplicationRule(
        id="picard-one-contrapositive",
        description="Picard rank one, separably uniruled, tangent sheaf not unstable => SRC.",
        premises=(("picard_rank_one", "true"), ("separably_uniruled", "yes"), ("tangent_semistable", "yes")),
        conclusion=Tri.YES,
    ),
    ImplicationRule(
        id="free-curves-semistable",
        description="Fano, separably uniruled, N_1 generated by free curves, semistable tangent sheaf => SRC.",
        premises=(
            ("fano", "true"),
            ("separably_uniruled", "yes"),
            ("n1_generated_by_free", "yes"),
            ("tangent_semistable", "yes"),
        ),
        conclusion=Tri.YES,
    ),
    ImplicationRule(
        id="fano-ci-equivalence",
        description="Smooth Fano complete intersection of dimension >= 3: separably uniruled <=> SRC.",
        premises=(("fano_complete_intersection_dim3", "true"), ("separably_uniruled", "yes")),
        conclusion=Tri.YES,
    ),
    ImplicationRule(
        id="src-requires-uniruled",
        description="An SRC variety is separably uniruled.",
        premises=(("separably_uniruled", "no"),),
        conclusion=Tri.NO,
    ),
)


@dataclass(frozen=True)
class ImplicationVerdict:
    """Conclusion about separable rational connectedness with the rule that produced it."""

    src: Tri
    rule: Optional[str] = None
    trace: Tuple[str, ...] = ()
    rationally_connected: Tri = Tri.UNKNOWN

    def to_dict(self) -> Dict:
        return {
            "src": self.src.value,
            "rule": self.rule,
            "trace": list(self.trace),
            "rationally_connected": self.rationally_connected.value,
        }


def implication_verdict(data: ImplicationInput) -> ImplicationVerdict:
    """Apply the rules in order; the first whose premises all hold decides, otherwise unknown."""

    for rule in RULES:
        if all(data.value_of(name) == wanted for name, wanted in rule.premises):
            trace = tuple(f"{name}={wanted}" for name, wanted in rule.premises)
            # SRC implies rationally connected.
            rc = Tri.YES if rule.conclusion is Tri.YES else Tri.UNKNOWN
            return ImplicationVerdict(src=rule.conclusion, rule=rule.id, trace=trace, rationally_connected=rc)
    return ImplicationVerdict(src=Tri.UNKNOWN)


__all__ = ["ImplicationInput", "ImplicationRule", "ImplicationVerdict", "RULES", "Tri", "implication_verdict"]
