"""Exact metabelian census, Riley polynomials and A-polynomial checks."""

import json

from ._core import (
    InputError,
    RileyError,
    count_metabelian,
    cross_check,
    enumerate_metabelian,
    riley_section,
    run_json,
    seifert_determinant,
    verify_two_bridge,
)

__all__ = [
    "InputError",
    "RileyError",
    "count_metabelian",
    "cross_check",
    "enumerate_metabelian",
    "riley_section",
    "run",
    "seifert_determinant",
    "verify_two_bridge",
]


def run(command, input=None, p=None, q=None, p_max=None, general_t=False, small=False):
    """Run a knotmeta command; returns (exit_code, report dict or None, stderr)."""
    code, out, err = run_json(command, input, p, q, p_max, general_t, small)
    return code, (json.loads(out) if out else None), err
