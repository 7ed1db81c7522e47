# Path: core/__init__.py
# Purpose: Package initializer for the core computation layer.
# Layer: core.
# Details: Subpackages: arith, models, projective, vanish, stability, curves, survey.
