"""Chromatic symmetric functions of conjoined graphs, exactly."""

from .graphs import Graph, RootedGraph, DoubleRootedGraph
from .oracle import chromatic_poly, csf_oracle
from .symfunc import EIExpansion, SymFuncE, SymFuncP, is_e_positive

__all__ = [
    "DoubleRootedGraph",
    "EIExpansion",
    "Graph",
    "RootedGraph",
    "SymFuncE",
    "SymFuncP",
    "__version__",
    "chromatic_poly",
    "csf_oracle",
    "is_e_positive",
]

__version__ = "0.1.0"
