"""Hilbert functions of the power ideals I_{n,k,d} and of fat xi-points."""

__version__ = "0.1.0"

from .grading import Multicycle, Params, gens_count, weight_counts
from .hilbert import HilbertFunction, HilbertSeries, hf_table

__all__ = [
    "HilbertFunction",
    "HilbertSeries",
    "Multicycle",
    "Params",
    "gens_count",
    "hf_table",
    "weight_counts",
    "__version__",
]
