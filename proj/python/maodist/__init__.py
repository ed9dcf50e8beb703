"""Multi-set allocation occupancy (MAO) distribution toolkit.

A population of N individuals is sampled T times without replacement; the
functions here give exact, simulated and approximate answers about how many
individuals land in exactly (or at least) t of the T subsets.
"""

from ._core import (
    diagnose,
    moments,
    norm,
    pmf,
    simulate,
    tail_pvalue,
    verify,
)

__all__ = [
    "diagnose",
    "moments",
    "norm",
    "pmf",
    "simulate",
    "tail_pvalue",
    "verify",
]
