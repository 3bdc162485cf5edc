"""Tool configuration: JSON file, environment variable and flag overrides."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field, replace
from functools import lru_cache
from importlib import resources
from typing import Any

import jsonschema

from hybridscan.detection.model import (
    DEFAULT_POLICY, DEFAULT_WEIGHTS, FusionWeights, Rule, TaintPolicy, Thresholds,
)
from hybridscan.detection.scan import ScanConfig
from hybridscan.detection.semantic import ExternalScorer, LexicalScorer, load_lexicon
from hybridscan.evaluation.risk import DEFAULT_RISK_TABLE, RiskTable

CONFIG_ENV = "HYBRIDSCAN_CONFIG"
FAIL_LEVELS = ("info", "warning", "error")
OUTPUT_FORMATS = ("text", "json", "sarif")

# config section -> (file key, Thresholds attribute)
THRESHOLD_KEYS: dict[str, list[tuple[str, str]]] = {
    "LongMethod": [("nos", "long_method_nos"), ("cc", "long_method_cc")],
    "GodClass": [("nom", "god_class_nom"), ("wmc", "god_class_wmc"), ("loc", "god_class_loc"),
                 ("cbo", "god_class_cbo")],
    "DataClass": [("accessorRatio", "data_class_accessor_ratio"), ("fields", "data_class_fields"),
                  ("wmcSlack", "data_class_wmc_slack")],
    "FeatureEnvy": [("foreign", "feature_envy_foreign")],
    "DuplicatedCode": [("minTokens", "clone_min_tokens")],
    "HardcodedSecret": [("minLength", "secret_min_length"), ("entropyMinLength", "entropy_min_length"),
                        ("entropyBits", "entropy_bits")],
}


class ConfigError(ValueError):
    """Raised when a configuration document fails validation."""

    def __init__(self, pointer: str, message: str):
        super().__init__(f"{pointer or '/'}: {message}")
        self.pointer = pointer
        self.message = message


@lru_cache(maxsize=1)
def config_schema() -> dict:
    text = resources.files("hybridscan.delivery").joinpath("data/config.schema.json").read_text(encoding="utf-8")
    return json.loads(text)


def validate_config(doc: Any) -> None:
    validator = jsonschema.Draft202012Validator(config_schema())
    errors = sorted(validator.iter_errors(doc), key=lambda e: (list(e.absolute_path), e.message))
    if errors:
        err = errors[0]
        pointer = "".join(f"/{p}" for p in err.absolute_path)
        raise ConfigError(pointer, err.message)
    fusion = doc.get("fusion", {}) if isinstance(doc, dict) else {}
    if ("wStruct" in fusion) != ("wSem" in fusion):
        raise ConfigError("/fusion", "wStruct and wSem must be given together")
    try:
        FusionWeights.from_dict({**DEFAULT_WEIGHTS.to_dict(), **fusion})
    except ValueError as exc:
        raise ConfigError("/fusion", str(exc)) from None
    if "taintPolicy" in doc:
        try:
            TaintPolicy.from_dict(doc["taintPolicy"])
        except ValueError as exc:
            raise ConfigError("/taintPolicy", str(exc)) from None


@dataclass(frozen=True)
class ToolConfig:
    thresholds: Thresholds = field(default_factory=Thresholds)
    weights: FusionWeights = DEFAULT_WEIGHTS
    policy: TaintPolicy = DEFAULT_POLICY
    enabled: frozenset[Rule] = frozenset(Rule)
    scorer_kind: str = "lexical"
    scorer_command: str | None = None
    scorer_timeout: float = 2.0
    lexicon: str | None = None
    risk: RiskTable = DEFAULT_RISK_TABLE
    format: str = "text"
    fail_on: str = "error"
    pr_comment_cap: int = 50
    state_dir: str = ".hybridscan"

    @classmethod
    def from_dict(cls, doc: dict) -> ToolConfig:
        """Build a config from a validated document; omitted keys keep defaults."""
        validate_config(doc)
        base = cls()
        th = {}
        for section, keys in THRESHOLD_KEYS.items():
            for key, attr in keys:
                if key in doc.get("thresholds", {}).get(section, {}):
                    th[attr] = doc["thresholds"][section][key]
        weights = base.weights
        if "fusion" in doc:
            f = doc["fusion"]
            overrides = dict(weights.overrides)
            overrides.update({k: (v["wStruct"], v["wSem"]) for k, v in f.get("overrides", {}).items()})
            weights = FusionWeights(f.get("wStruct", weights.w_struct), f.get("wSem", weights.w_sem),
                                    f.get("threshold", weights.threshold), overrides)
        scorer = doc.get("scorer", {})
        risk = base.risk
        if "riskScores" in doc:
            r = doc["riskScores"]
            risk = RiskTable.from_dict({**base.risk.to_dict(), **r,
                                        "cweScores": {**base.risk.to_dict()["cweScores"], **r.get("cweScores", {})}})
        return cls(
            thresholds=replace(base.thresholds, **th),
            weights=weights,
            policy=TaintPolicy.from_dict(doc["taintPolicy"]) if "taintPolicy" in doc else base.policy,
            enabled=frozenset(Rule(r) for r in doc["enabledRules"]) if "enabledRules" in doc else base.enabled,
            scorer_kind=scorer.get("kind", "external" if scorer.get("command") else base.scorer_kind),
            scorer_command=scorer.get("command"),
            scorer_timeout=scorer.get("timeout", base.scorer_timeout),
            lexicon=scorer.get("lexicon"),
            risk=risk,
            format=doc.get("format", base.format),
            fail_on=doc.get("failOn", base.fail_on),
            pr_comment_cap=doc.get("prCommentCap", base.pr_comment_cap),
            state_dir=doc.get("stateDir", base.state_dir),
        )

    def to_dict(self) -> dict:
        th: dict[str, dict] = {}
        for section, keys in THRESHOLD_KEYS.items():
            th[section] = {key: getattr(self.thresholds, attr) for key, attr in keys}
        return {
            "thresholds": th,
            "fusion": self.weights.to_dict(),
            "taintPolicy": self.policy.to_dict(),
            "enabledRules": sorted(r.value for r in self.enabled),
            "scorer": {"kind": self.scorer_kind, "command": self.scorer_command,
                       "timeout": self.scorer_timeout, "lexicon": self.lexicon},
            "riskScores": self.risk.to_dict(),
            "format": self.format,
            "failOn": self.fail_on,
            "prCommentCap": self.pr_comment_cap,
            "stateDir": self.state_dir,
        }

    def scan_config(self, weights: FusionWeights | None = None) -> ScanConfig:
        lexical = LexicalScorer(load_lexicon(self.lexicon)) if self.lexicon else LexicalScorer()
        if self.scorer_kind == "none":
            scorer = None
        elif self.scorer_kind == "external" and self.scorer_command:
            scorer = ExternalScorer(self.scorer_command, self.scorer_timeout, fallback=lexical)
        else:
            scorer = lexical
        return ScanConfig(self.thresholds, weights or self.weights, self.policy, self.enabled, scorer,
                          lexical.context_lines)


def load_config(path: str | None = None, env: dict[str, str] | None = None) -> ToolConfig:
    """Load ``path``, else the file named by the environment variable, else the defaults."""
    env = os.environ if env is None else env
    path = path or env.get(CONFIG_ENV) or None
    if path is None:
        return ToolConfig()
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ConfigError("", f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    return ToolConfig.from_dict(doc)
