"""Smell and vulnerability detectors with fused structural and semantic scoring."""

from hybridscan.detection.clones import ClonePair, CloneRegion, detect_duplicated_code
from hybridscan.detection.fusion import SEMANTIC_ONLY, STRUCTURAL_ONLY, emitted, fuse
from hybridscan.detection.model import (
    CLASS_RULES, DEFAULT_POLICY, DEFAULT_WEIGHTS, METHOD_RULES, RULE_CWE, VULNERABILITY_RULES,
    Candidate, Finding, FusionWeights, Rule, SinkPattern, SourcePattern, TaintPolicy, Thresholds,
    finding_id,
)
from hybridscan.detection.scan import ScanConfig, ScanResult, SkippedUnit, scan_unit, scan_units
from hybridscan.detection.secrets import detect_hardcoded_secret, shannon_entropy
from hybridscan.detection.semantic import (
    ExternalScorer, LexicalScorer, PluginMalformedReply, PluginTimeout, ScoreRequest, window_request,
)
from hybridscan.detection.smells import (
    detect_data_class, detect_feature_envy, detect_god_class, detect_long_method,
)
from hybridscan.detection.taint import TaintPath, detect_injection, taint_analyze

__all__ = [
    "CLASS_RULES", "DEFAULT_POLICY", "DEFAULT_WEIGHTS", "METHOD_RULES", "RULE_CWE", "SEMANTIC_ONLY",
    "STRUCTURAL_ONLY", "VULNERABILITY_RULES", "Candidate", "ClonePair", "CloneRegion", "ExternalScorer",
    "Finding", "FusionWeights", "LexicalScorer", "PluginMalformedReply", "PluginTimeout", "Rule",
    "ScanConfig", "ScanResult", "ScoreRequest", "SinkPattern", "SkippedUnit", "SourcePattern",
    "TaintPath", "TaintPolicy", "Thresholds", "detect_data_class", "detect_duplicated_code",
    "detect_feature_envy", "detect_god_class", "detect_hardcoded_secret", "detect_injection",
    "detect_long_method", "emitted", "finding_id", "fuse", "scan_unit", "scan_units",
    "shannon_entropy", "taint_analyze", "window_request",
]
