"""Commutative-transitive and CSA property checks on finite groups."""

import json

from ._ctcsa import (
    CtcsaError,
    Group,
    builtin_text,
    default_config_json,
    evaluate,
    normalize_sentence,
    psl2_order,
    suite_names,
)
from . import _ctcsa

__all__ = [
    "CtcsaError",
    "Group",
    "builtin_text",
    "default_config",
    "error_code",
    "evaluate",
    "group_info",
    "normalize_sentence",
    "psl2_order",
    "run_suite",
    "suite_names",
]


def error_code(exc):
    """The error code name carried by a CtcsaError message."""
    return str(exc).split(":", 1)[0]


def group_info(recipe):
    return json.loads(_ctcsa.group_info(recipe))


def default_config():
    return json.loads(default_config_json())


def run_suite(name, config=None, timestamp=True):
    """Runs a suite (or "all") and returns the parsed JSON report."""
    config_json = None if config is None else json.dumps(config)
    return json.loads(_ctcsa.run_suite(name, config_json, timestamp))
