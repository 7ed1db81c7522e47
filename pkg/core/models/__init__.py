# Path: core/models/__init__.py
# Purpose: Package initializer for domain model definitions.
# Layer: core/models.
# Details: Exposes the complete-intersection spec and cohomology query shared across layers.

from .domain import CohomologyQuery, CompleteIntersectionSpec

__all__ = ["CohomologyQuery", "CompleteIntersectionSpec"]
