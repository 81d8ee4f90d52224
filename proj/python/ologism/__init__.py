"""Ologisms: olog types and aspects with categorical premisses."""

from ._ologism import (
    Model,
    Ologism,
    check_model,
    closure,
    cmd_check,
    cmd_export_dot,
    contradictions,
    derived,
    equal_paths,
    explain,
    mood_counts,
    parse_model,
    parse_ologism,
    prove,
    serialize,
    serialize_model,
    to_dot,
)

__all__ = [
    "Model",
    "Ologism",
    "check_model",
    "closure",
    "cmd_check",
    "cmd_export_dot",
    "contradictions",
    "derived",
    "equal_paths",
    "explain",
    "mood_counts",
    "parse_model",
    "parse_ologism",
    "prove",
    "serialize",
    "serialize_model",
    "to_dot",
]
