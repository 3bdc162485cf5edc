"""CI-facing delivery: configuration, SARIF, PR comments, changed-files mode, feedback and the CLI."""

from hybridscan.delivery.changes import ChangedFiles, DiffParseError, filter_changed, parse_diff, tag_in_diff
from hybridscan.delivery.comments import NO_ISSUES, render_pr_comment
from hybridscan.delivery.config import CONFIG_ENV, ConfigError, ToolConfig, config_schema, load_config, validate_config
from hybridscan.delivery.feedback import (
    FeedbackLog, FeedbackRecord, FeedbackState, UnknownFinding, Verdict, record_feedback, replay, update_weights,
)
from hybridscan.delivery.sarif import ToolMeta, dump_sarif, emit_sarif, level

__all__ = [
    "CONFIG_ENV", "ChangedFiles", "ConfigError", "DiffParseError", "FeedbackLog", "FeedbackRecord",
    "FeedbackState", "NO_ISSUES", "ToolConfig", "ToolMeta", "UnknownFinding", "Verdict", "config_schema",
    "dump_sarif", "emit_sarif", "filter_changed", "level", "load_config", "parse_diff", "record_feedback",
    "render_pr_comment", "replay", "tag_in_diff", "update_weights", "validate_config",
]
