# Path: core/vanish/rules.py
# Purpose: Define vanishing claims and the exact-sequence rules that reduce one claim to others.
# Layer: core/vanish.
# Details: Each rule states when it applies, which premises it needs and which side conditions it checks;
#          the search engine and the certificate checker share these definitions.

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, replace
from enum import Enum
from typing import Dict, List, Optional, Tuple

from core.models.domain import CohomologyQuery, CompleteIntersectionSpec
from core.projective.hilbert import line_bundle_cohomology


class SheafKind(str, Enum):
    """Which sheaf a claim is about at its tower level."""

    OMEGA = "omega"  # Omega_Y^q(t) on Y = level
    RESTRICTED = "restricted"  # Omega_X^q(t)|_Y, X = level - 1


class RuleId(str, Enum):
    LINE_BUNDLE_BASE = "LineBundleBase"
    EULER_POWER_SEQ = "EulerPowerSeq"
    RESTRICTION_SEQ = "RestrictionSeq"
    CONORMAL_POWER_SEQ = "ConormalPowerSeq"


@dataclass(frozen=True)
class VanishingClaim:
    """The claim H^p(X_level, F) = 0 where F is Omega^q(t) or a restricted ambient Omega^q(t)."""

    spec: CompleteIntersectionSpec
    level: int
    query: CohomologyQuery
    sheaf: SheafKind = SheafKind.OMEGA

    def __post_init__(self) -> None:
        if not 0 <= self.level <= self.spec.codim:
            raise ValueError(f"Tower level {self.level} outside 0..{self.spec.codim}.")
        if self.sheaf is SheafKind.RESTRICTED and self.level == 0:
            raise ValueError("Restricted claims need an ambient member, so level >= 1.")

    @classmethod
    def top(cls, spec: CompleteIntersectionSpec, p: int, q: int, t: int) -> "VanishingClaim":
        """Claim about X itself (the last member of the tower)."""

        return cls(spec, spec.codim, CohomologyQuery(p, q, t))

    @property
    def level_spec(self) -> CompleteIntersectionSpec:
        return self.spec.prefix(self.level)

    @property
    def dim(self) -> int:
        return self.spec.ambient_dim - self.level

    @property
    def cut_degree(self) -> Optional[int]:
        """Degree of the hypersurface cutting this level out of the previous one."""

        return self.spec.degrees[self.level - 1] if self.level >= 1 else None

    @property
    def measure(self) -> Tuple[int, int, int]:
        """Decreases lexicographically along every premise, so recursion terminates."""

        return (self.level, self.query.q, 0 if self.sheaf is SheafKind.RESTRICTED else 1)

    def in_range(self) -> bool:
        return self.query.in_vanishing_range(self.dim)

    def at(self, level: int, p: int, q: int, t: int, sheaf: SheafKind = SheafKind.OMEGA) -> "VanishingClaim":
        return replace(self, level=level, query=CohomologyQuery(p, q, t), sheaf=sheaf)

    def to_dict(self) -> Dict:
        return {
            "n": self.spec.ambient_dim,
            "degrees": list(self.spec.degrees),
            "level": self.level,
            "sheaf": self.sheaf.value,
            **self.query.to_dict(),
        }

    def describe(self) -> str:
        q = self.query
        space = self.level_spec.label()
        if self.sheaf is SheafKind.RESTRICTED:
            return f"H^{q.p}({space}, Omega_amb^{q.q}({q.t})|) = 0"
        return f"H^{q.p}({space}, Omega^{q.q}({q.t})) = 0"


class VanishingRule(ABC):
    """One step of the inductive argument: a claim follows from the vanishing of its premises."""

    id: RuleId
    description: str

    @abstractmethod
    def applies(self, claim: VanishingClaim) -> bool:
        """True if this rule is the one responsible for claims of this shape."""

    @abstractmethod
    def premises(self, claim: VanishingClaim) -> List[VanishingClaim]:
        """Premise claims in schema order."""

    def side_conditions_hold(self, claim: VanishingClaim) -> bool:
        return True


class LineBundleBase(VanishingRule):
    """Leaf: q = 0, decided by the exact line-bundle cohomology of the tower member."""

    id = RuleId.LINE_BUNDLE_BASE
    description = "h^p(X, O_X(t)) read off from the Hilbert function and Serre duality."

    def applies(self, claim: VanishingClaim) -> bool:
        return claim.sheaf is SheafKind.OMEGA and claim.query.q == 0

    def premises(self, claim: VanishingClaim) -> List[VanishingClaim]:
        return []

    def base_dimension(self, claim: VanishingClaim) -> int:
        return line_bundle_cohomology(claim.level_spec, claim.query.p, claim.query.t)


class EulerPowerSeq(VanishingRule):
    """On P^n: H^(p-1)(Omega^(q-1)(t)) -> H^p(Omega^q(t)) -> H^p(wedge^q V (t - q)).

    With p = 0 the left group is H^(-1) = 0 and only the line-bundle premise remains.
    """

    id = RuleId.EULER_POWER_SEQ
    description = "Exterior power of the Euler sequence on projective space."

    def applies(self, claim: VanishingClaim) -> bool:
        return claim.sheaf is SheafKind.OMEGA and claim.level == 0 and claim.query.q >= 1

    def premises(self, claim: VanishingClaim) -> List[VanishingClaim]:
        p, q, t = claim.query.p, claim.query.q, claim.query.t
        result: List[VanishingClaim] = []
        if p >= 1:
            result.append(claim.at(0, p - 1, q - 1, t))
        result.append(claim.at(0, p, 0, t - q))
        return result


class RestrictionSeq(VanishingRule):
    """H^p(X, Omega_X^q(t)) -> H^p(Y, Omega_X^q(t)|_Y) -> H^(p+1)(X, Omega_X^q(t - d))."""

    id = RuleId.RESTRICTION_SEQ
    description = "Restriction of Omega_X^q to the hypersurface Y."

    def applies(self, claim: VanishingClaim) -> bool:
        return claim.sheaf is SheafKind.RESTRICTED

    def premises(self, claim: VanishingClaim) -> List[VanishingClaim]:
        p, q, t = claim.query.p, claim.query.q, claim.query.t
        d = claim.cut_degree
        below = claim.level - 1
        return [claim.at(below, p, q, t), claim.at(below, p + 1, q, t - d)]


class ConormalPowerSeq(VanishingRule):
    """H^p(Y, Omega_X^q(t)|_Y) -> H^p(Y, Omega_Y^q(t)) -> H^(p+1)(Y, Omega_Y^(q-1)(t - d))."""

    id = RuleId.CONORMAL_POWER_SEQ
    description = "Exterior power of the conormal sequence of a hypersurface."

    def applies(self, claim: VanishingClaim) -> bool:
        return claim.sheaf is SheafKind.OMEGA and claim.level >= 1 and claim.query.q >= 1

    def premises(self, claim: VanishingClaim) -> List[VanishingClaim]:
        p, q, t = claim.query.p, claim.query.q, claim.query.t
        d = claim.cut_degree
        return [
            claim.at(claim.level, p, q, t, SheafKind.RESTRICTED),
            claim.at(claim.level, p + 1, q - 1, t - d),
        ]

    def side_conditions_hold(self, claim: VanishingClaim) -> bool:
        # (p+1) + q < dim of the ambient member, and t - d < q - (p+1); the second needs d >= 2.
        p, q, t = claim.query.p, claim.query.q, claim.query.t
        ambient_dim = claim.dim + 1
        return (p + 1) + q < ambient_dim and t - claim.cut_degree < q - (p + 1)


RULES: Dict[RuleId, VanishingRule] = {
    rule.id: rule for rule in (LineBundleBase(), EulerPowerSeq(), RestrictionSeq(), ConormalPowerSeq())
}


def select_rule(claim: VanishingClaim) -> VanishingRule:
    """Return the unique rule responsible for the claim's shape."""

    for rule in RULES.values():
        if rule.applies(claim):
            return rule
    raise RuntimeError(f"No rule applies to {claim.describe()}")


__all__ = [
    "ConormalPowerSeq",
    "EulerPowerSeq",
    "LineBundleBase",
    "RULES",
    "RestrictionSeq",
    "RuleId",
    "SheafKind",
    "VanishingClaim",
    "VanishingRule",
    "select_rule",
]
