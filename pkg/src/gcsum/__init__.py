"""Exact degree-extensions and min/max chromatic sums of small graphs."""

from .chromatic import (
    Coloring,
    SumReport,
    chi_sums,
    chi_sums_over_extensions,
    chromatic_number,
    color_sum,
    predict,
)
from .errors import GcsumError
from .graph import BipartitePartition, Graph, complement, family, new_graph

__version__ = "0.1.0"
