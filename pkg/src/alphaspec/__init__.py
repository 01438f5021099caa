"""Spectra, energies and energy bounds of the A_alpha = alpha*D + (1-alpha)*A
matrix of a graph, with an exhaustive small-graph verifier."""

from .bounds import (
    BoundNotApplicable,
    BoundReport,
    Shape,
    SpectrumShape,
    classify_equality_shape,
    full_report,
    moment_y,
    zagreb_bounds,
)
from .closed_forms import (
    SrgParams,
    SrgSpectrum,
    balanced_bipartite_alpha_spectrum,
    complete_alpha_spectrum,
    matching_union_alpha_spectrum,
    srg_alpha_spectrum,
)
from .eigen import ConvergenceError, eigen_symmetric, jacobi
from .graph import Graph, GraphError, GraphFamily, generate, is_connected, make_graph
from .graph6 import Graph6Error, parse_graph6, read_graph6, write_graph6
from .spectra import Spectrum, build_alpha_matrix, distinct_eigenvalues, spectrum
from .verify import SweepConfig, VerificationReport, enumerate_graphs, run_suite

__version__ = "0.1.0"

__all__ = [
    "BoundNotApplicable", "BoundReport", "ConvergenceError", "Graph", "Graph6Error", "GraphError",
    "GraphFamily", "Shape", "Spectrum", "SpectrumShape", "SrgParams", "SrgSpectrum", "SweepConfig",
    "VerificationReport", "balanced_bipartite_alpha_spectrum", "build_alpha_matrix",
    "classify_equality_shape", "complete_alpha_spectrum", "distinct_eigenvalues", "eigen_symmetric",
    "enumerate_graphs", "full_report", "generate", "is_connected", "jacobi", "make_graph",
    "matching_union_alpha_spectrum", "moment_y", "parse_graph6", "read_graph6", "run_suite",
    "spectrum", "srg_alpha_spectrum", "write_graph6", "zagreb_bounds",
]
