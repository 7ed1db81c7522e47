# Path: core/survey/__init__.py
# Purpose: Package initializer for the multidegree survey.
# Layer: core/survey.
# Details: Exposes the survey pipeline and its rows.

from .pipeline import SurveyPipeline, SurveyRow, iter_fano_specs

__all__ = ["SurveyPipeline", "SurveyRow", "iter_fano_specs"]
