"""Differential uniformity of Wan-Lidl polynomials over finite fields."""

from ._wldu import (
    Field,
    WanLidlParams,
    bound_binomial_even_s,
    bound_general,
    bound_s2_even_d,
    cli,
    corollary_certify,
    differential_uniformity,
    du_binomial,
    du_wanlidl,
    is_pp,
    run_sweep,
    sweep_row,
)

__all__ = [
    "Field",
    "WanLidlParams",
    "bound_binomial_even_s",
    "bound_general",
    "bound_s2_even_d",
    "cli",
    "corollary_certify",
    "differential_uniformity",
    "du_binomial",
    "du_wanlidl",
    "is_pp",
    "run_sweep",
    "sweep_row",
]
