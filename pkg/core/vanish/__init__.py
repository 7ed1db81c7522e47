# Path: core/vanish/__init__.py
# Purpose: Package initializer for the vanishing-certificate engine.
# Layer: core/vanish.
# Details: Exposes claims, rules, certificates, the search, the replay checker and range sweeps.

from .certificates import (
    CertificateStructureError,
    NotCertifiedReason,
    VanishingCertificate,
    VanishingOutcome,
    certificate_depth,
    certificate_from_dict,
    certificate_size,
    check_certificate,
)
from .engine import CLAIM_CACHE_SIZE, SweepStatus, default_t_min, summarize_sweep, sweep_range, verify_vanishing
from .rules import RuleId, SheafKind, VanishingClaim

__all__ = [
    "CLAIM_CACHE_SIZE",
    "CertificateStructureError",
    "NotCertifiedReason",
    "RuleId",
    "SheafKind",
    "SweepStatus",
    "VanishingCertificate",
    "VanishingClaim",
    "VanishingOutcome",
    "certificate_depth",
    "certificate_from_dict",
    "certificate_size",
    "check_certificate",
    "default_t_min",
    "summarize_sweep",
    "sweep_range",
    "verify_vanishing",
]
