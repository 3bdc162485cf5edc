"""Repair suggestions: patches, refactorings and validation by re-analysis."""

from hybridscan.repair.extract import (
    NoExtractableRegion, Region, Signature, candidate_regions, extract_method, region_signature,
)
from hybridscan.repair.patch import (
    Edit, OutOfBounds, OverlappingEdits, Patch, PatchKind, apply_patch, edit_chars, map_line,
    span_text, unified_diff,
)
from hybridscan.repair.query import UnsupportedShape, parameterize_query, quote_command
from hybridscan.repair.secret import env_key, relocate_secret
from hybridscan.repair.suggest import RepairSuggestion, advisory, rank, repair, suggest, validate_suggestion
from hybridscan.repair.validate import ValidationReport, validate

__all__ = [
    "Edit", "NoExtractableRegion", "OutOfBounds", "OverlappingEdits", "Patch", "PatchKind", "Region",
    "RepairSuggestion", "Signature", "UnsupportedShape", "ValidationReport", "advisory", "apply_patch",
    "candidate_regions", "edit_chars", "env_key", "extract_method", "map_line", "parameterize_query",
    "quote_command", "rank", "region_signature", "relocate_secret", "repair", "span_text", "suggest",
    "unified_diff", "validate", "validate_suggestion",
]
