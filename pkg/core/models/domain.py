# Path: core/models/domain.py
# Purpose: Define domain models shared across the cohomology, vanishing, stability and survey layers.
# Layer: core/models.
# Details: Frozen dataclasses so specs and queries can key caches and be shared across threads.

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod
from typing import Dict, Iterable, Tuple

from core.arith.fields import FieldSpec


@dataclass(frozen=True)
class CompleteIntersectionSpec:
    """A complete intersection X in P^n of multidegree (d_1, ..., d_c); c = 0 means X = P^n.

    The multidegree order fixes the tower P^n > X_1 > ... > X_c used by the vanishing engine.
    """

    ambient_dim: int
    degrees: Tuple[int, ...] = ()
    field: FieldSpec = field(default_factory=FieldSpec)

    def __post_init__(self) -> None:
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        if self.ambient_dim < 1:
            raise ValueError(f"Ambient dimension must be positive, got {self.ambient_dim}.")
        if any(d == 1 for d in self.degrees):
            raise ValueError(
                "Degree-1 factors are not allowed: a hyperplane section of P^n is P^(n-1), "
                "so drop the factor and lower n by one."
            )
        if any(d < 1 for d in self.degrees):
            raise ValueError(f"Degrees must be at least 2, got {self.degrees}.")
        if self.dim < 1:
            raise ValueError(
                f"Complete intersection of codimension {self.codim} in P^{self.ambient_dim} would have dimension {self.dim}."
            )

    @classmethod
    def normalized(cls, ambient_dim: int, degrees: Iterable[int], field: FieldSpec | None = None) -> "CompleteIntersectionSpec":
        """Sort the multidegree ascending; degree-1 entries are rejected by validation."""

        return cls(ambient_dim, tuple(sorted(int(d) for d in degrees)), field or FieldSpec())

    @property
    def codim(self) -> int:
        return len(self.degrees)

    @property
    def dim(self) -> int:
        return self.ambient_dim - self.codim

    @property
    def degree(self) -> int:
        """deg X = product of the d_i."""

        return prod(self.degrees)

    @property
    def degree_sum(self) -> int:
        return sum(self.degrees)

    @property
    def canonical_twist(self) -> int:
        """k with omega_X = O_X(k), by adjunction: sum d_i - n - 1."""

        return self.degree_sum - self.ambient_dim - 1

    def prefix(self, level: int) -> "CompleteIntersectionSpec":
        """The level-th member of the tower: cut by the first ``level`` hypersurfaces."""

        if not 0 <= level <= self.codim:
            raise ValueError(f"Tower level {level} outside 0..{self.codim}.")
        return CompleteIntersectionSpec(self.ambient_dim, self.degrees[:level], self.field)

    def label(self) -> str:
        if not self.degrees:
            return f"P^{self.ambient_dim}"
        return f"X({','.join(str(d) for d in self.degrees)}) in P^{self.ambient_dim}"

    def to_dict(self) -> Dict:
        return {"n": self.ambient_dim, "degrees": list(self.degrees)}


@dataclass(frozen=True, order=True)
class CohomologyQuery:
    """The cohomology group H^p(X, Omega^q(t))."""

    p: int
    q: int
    t: int

    def __post_init__(self) -> None:
        if self.p < 0 or self.q < 0:
            raise ValueError(f"Cohomological degree and exterior power must be nonnegative, got p={self.p}, q={self.q}.")

    def in_vanishing_range(self, dim: int) -> bool:
        """p + q < dim and t < q - p."""

        return self.p + self.q < dim and self.t < self.q - self.p

    def to_dict(self) -> Dict:
        return {"p": self.p, "q": self.q, "t": self.t}


__all__ = ["CohomologyQuery", "CompleteIntersectionSpec"]
