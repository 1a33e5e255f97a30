"""Keyword-emphasis subtitling: tokenize, classify, style, measure, export and replay."""

import json as _json

from ._dynamik import (
    Error,
    ParseError,
    UndefinedDensityError,
    ValidationError,
    apply_mode,
    area_ratio,
    classify,
    default_style,
    density_report,
    parse_replay_script,
    synthesize_script,
    to_ass,
    to_webvtt,
    tokenize,
)
from ._dynamik import replay_messages as _replay_messages

MODES = ("normal", "keyword", "dynamik")


def replay(script_json, mode="dynamik", scale=0.0, refresh_ms=500, linger_ms=2000):
    """Frames (as wire-format dicts) produced by replaying a script."""
    return [_json.loads(m) for m in _replay_messages(script_json, mode, scale, refresh_ms, linger_ms)]


__all__ = [
    "Error",
    "ParseError",
    "UndefinedDensityError",
    "ValidationError",
    "MODES",
    "apply_mode",
    "area_ratio",
    "classify",
    "default_style",
    "density_report",
    "parse_replay_script",
    "replay",
    "synthesize_script",
    "to_ass",
    "to_webvtt",
    "tokenize",
]
