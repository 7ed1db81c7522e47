# Path: core/vanish/certificates.py
# Purpose: Certificate trees for vanishing claims, their canonical JSON form and an independent replay checker.
# Layer: core/vanish.
# Details: The checker re-derives every premise from the rule schema and re-evaluates every leaf;
#          it never calls the search in engine.py.

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional, Tuple

from core.arith.fields import FieldSpec
from core.models.domain import CohomologyQuery, CompleteIntersectionSpec

from .rules import RULES, LineBundleBase, RuleId, SheafKind, VanishingClaim


class CertificateStructureError(ValueError):
    """Raised when a certificate tree violates a rule's premise schema."""


class NotCertifiedReason(str, Enum):
    OUT_OF_RANGE = "out-of-range"
    RECURSION_FAILED = "recursion-failed"


@dataclass(frozen=True)
class VanishingCertificate:
    """A node of a derivation tree; leaves are LineBundleBase nodes carrying dimension 0."""

    claim: VanishingClaim
    rule: RuleId
    premises: Tuple["VanishingCertificate", ...] = ()
    dimension: Optional[int] = None

    def to_dict(self) -> Dict:
        payload: Dict = {
            "claim": self.claim.to_dict(),
            "rule": self.rule.value,
            "premises": [p.to_dict() for p in self.premises],
        }
        if self.rule is RuleId.LINE_BUNDLE_BASE:
            payload["dimension"] = self.dimension
            payload["source"] = "line-bundle"
        return payload


@dataclass(frozen=True)
class VanishingOutcome:
    """Either a certified claim with its certificate, or the reason it was not certified."""

    claim: VanishingClaim
    certificate: Optional[VanishingCertificate] = None
    reason: Optional[NotCertifiedReason] = None
    detail: str = field(default="", compare=False)

    @property
    def certified(self) -> bool:
        return self.certificate is not None

    @classmethod
    def certified_by(cls, certificate: VanishingCertificate) -> "VanishingOutcome":
        return cls(claim=certificate.claim, certificate=certificate)

    @classmethod
    def not_certified(cls, claim: VanishingClaim, reason: NotCertifiedReason, detail: str = "") -> "VanishingOutcome":
        return cls(claim=claim, reason=reason, detail=detail)

    def to_dict(self) -> Dict:
        if self.certificate is not None:
            return {"status": "certified", "certificate": self.certificate.to_dict()}
        return {"status": "not-certified", "reason": self.reason.value, "claim": self.claim.to_dict()}


def claim_from_dict(payload: Dict, field_spec: FieldSpec | None = None) -> VanishingClaim:
    spec = CompleteIntersectionSpec(int(payload["n"]), tuple(payload["degrees"]), field_spec or FieldSpec())
    query = CohomologyQuery(int(payload["p"]), int(payload["q"]), int(payload["t"]))
    return VanishingClaim(spec, int(payload["level"]), query, SheafKind(payload.get("sheaf", "omega")))


def certificate_from_dict(payload: Dict) -> VanishingCertificate:
    """Rebuild a certificate from its canonical JSON tree."""

    try:
        rule = RuleId(payload["rule"])
        claim = claim_from_dict(payload["claim"])
        premises = tuple(certificate_from_dict(p) for p in payload.get("premises", []))
    except (KeyError, TypeError) as exc:
        raise CertificateStructureError(f"Malformed certificate node: {exc}") from exc
    dimension = payload.get("dimension")
    return VanishingCertificate(claim, rule, premises, None if dimension is None else int(dimension))


def check_certificate(cert: VanishingCertificate) -> bool:
    """Replay a certificate: True iff every node matches its rule schema and every leaf re-verifies.

    Raises CertificateStructureError when a node's premise count does not match its rule.
    """

    rule = RULES.get(cert.rule)
    if rule is None:
        raise CertificateStructureError(f"Unknown rule {cert.rule!r}.")
    claim = cert.claim
    if not rule.applies(claim):
        return False
    expected = rule.premises(claim)
    if len(cert.premises) != len(expected):
        raise CertificateStructureError(
            f"{rule.id.value} node for {claim.describe()} has {len(cert.premises)} premises, schema requires {len(expected)}."
        )
    if not claim.in_range() or not rule.side_conditions_hold(claim):
        return False
    if isinstance(rule, LineBundleBase):
        return cert.dimension == 0 and rule.base_dimension(claim) == 0
    for premise, wanted in zip(cert.premises, expected):
        if premise.claim != wanted:
            return False
    return all(check_certificate(premise) for premise in cert.premises)


def certificate_size(cert: VanishingCertificate) -> int:
    """Number of nodes in the tree."""

    return 1 + sum(certificate_size(p) for p in cert.premises)


def certificate_depth(cert: VanishingCertificate) -> int:
    return 1 + max((certificate_depth(p) for p in cert.premises), default=0)


__all__ = [
    "CertificateStructureError",
    "NotCertifiedReason",
    "VanishingCertificate",
    "VanishingOutcome",
    "certificate_depth",
    "certificate_from_dict",
    "certificate_size",
    "check_certificate",
    "claim_from_dict",
]
