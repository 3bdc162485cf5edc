"""Attributions and human-readable explanations for findings."""

from hybridscan.explanation.attribution import (
    Attribution, AttributionItem, AttributionKind, MissingEvidence, attribute, exceedance,
)
from hybridscan.explanation.render import (
    FORMATS, explanation_document, explanation_schema, render_explanation, validate_explanation,
)

__all__ = [
    "Attribution", "AttributionItem", "AttributionKind", "FORMATS", "MissingEvidence", "attribute",
    "exceedance", "explanation_document", "explanation_schema", "render_explanation",
    "validate_explanation",
]
