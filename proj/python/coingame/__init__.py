"""Exact solver and analysis toolkit for the sequential coin-flipping game.

Probabilities are passed as strings ("0.49", "3/5") or ``fractions.Fraction``;
exact results come back as ``Fraction``.
"""

from ._core import (
    a_value,
    b_value,
    brute_force,
    c_values,
    deficit,
    extrema,
    limit_L,
    limit_W,
    simulate,
    to_decimal,
    value_table,
    verify,
    w_value,
    w_values,
)

__all__ = [
    "a_value",
    "b_value",
    "brute_force",
    "c_values",
    "deficit",
    "extrema",
    "limit_L",
    "limit_W",
    "simulate",
    "to_decimal",
    "value_table",
    "verify",
    "w_value",
    "w_values",
]
