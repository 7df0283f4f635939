"""Hilbert-curve scores and cumulative-difference comparisons.

Orders covariate vectors along a Hilbert space-filling curve, producing
scalar scores in [0, 1], and compares the responses of a subpopulation
against the full population (or of two disjoint subpopulations) with
cumulative-difference graphs, Kolmogorov-Smirnov / Kuiper summaries, and a
plug-in significance scale.
"""

from ._core import (
    apply_jitter,
    compare_full,
    compare_two,
    decode_index,
    default_bits_per_dim,
    encode_point,
    hilbert_scores,
    normalize,
    synthesize,
)

__all__ = [
    "apply_jitter",
    "compare_full",
    "compare_two",
    "decode_index",
    "default_bits_per_dim",
    "encode_point",
    "hilbert_scores",
    "normalize",
    "synthesize",
]

__version__ = "0.1.0"
