"""Linear fusion of structural and semantic scores."""

from __future__ import annotations

from hybridscan.detection.model import FusionWeights, Rule


def fuse(structural: float, semantic: float, weights: FusionWeights, rule: Rule | str | None = None,
         semantic_available: bool = True) -> float:
    if not (0.0 <= structural <= 1.0 and 0.0 <= semantic <= 1.0):
        raise ValueError("scores must lie in [0, 1]")
    if not semantic_available:
        return structural
    ws, wl = weights.for_rule(rule) if rule is not None else (weights.w_struct, weights.w_sem)
    return round(min(1.0, max(0.0, ws * structural + wl * semantic)), 12)


def emitted(confidence: float, weights: FusionWeights) -> bool:
    return confidence >= weights.threshold


STRUCTURAL_ONLY = FusionWeights(1.0, 0.0)
SEMANTIC_ONLY = FusionWeights(0.0, 1.0)
