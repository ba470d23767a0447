"""Proportional-rate OFDMA power and subcarrier allocation."""

from ._core import (
    GaParams,
    InfeasibleQuotaError,
    InvalidInputError,
    MethodInapplicableError,
    NotFoundError,
    NumericalFailureError,
    ParseError,
    assign_subcarriers,
    compute_quotas,
    fixture,
    fixture_names,
    fixture_report,
    ga_trace,
    generate_channel,
    normalize_proportions,
    parse_scenario,
    solve,
    waterfill,
)

__all__ = [
    "GaParams",
    "InfeasibleQuotaError",
    "InvalidInputError",
    "MethodInapplicableError",
    "NotFoundError",
    "NumericalFailureError",
    "ParseError",
    "assign_subcarriers",
    "compute_quotas",
    "fixture",
    "fixture_names",
    "fixture_report",
    "ga_trace",
    "generate_channel",
    "normalize_proportions",
    "parse_scenario",
    "solve",
    "waterfill",
]
