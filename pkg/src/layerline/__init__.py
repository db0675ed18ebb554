"""Consecutive-layer hypercube graphs B(n, k), their line graphs, and exact
checks of their symmetry, Cayley status, spectra and Hamiltonicity."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    BudgetExceeded,
    CompNotApplicable,
    Disconnected,
    LayerlineError,
    NotAutomorphism,
    NotEulerian,
    OddCycle,
    ParamsOutOfRange,
    PreconditionViolated,
    SearchBudgetExceeded,
)
from .graph import Graph, bipartition, diameter, is_connected, line_graph  # noqa: E402
from .layers import LayerParams, SubsetVertex, build_b, build_line_b, middle_binomial_mod4  # noqa: E402
from .perms import Permutation, fixed_vertex_for_involution  # noqa: E402
from .automorphisms import automorphism_group  # noqa: E402
from .regular import regular_subgroup_search  # noqa: E402
from .field import GF, agl1, find_irreducible  # noqa: E402
from .cayley import cayley_graph, is_cayley, recognize_lb1, semidirect_affine_construction  # noqa: E402
from .spectral import line_b1_spectrum_report  # noqa: E402
from .hamilton import euler_circuit, hamiltonian_cycle_of_line_graph, validate_cycle  # noqa: E402

__all__ = [
    "__version__",
    "LayerlineError", "ParamsOutOfRange", "PreconditionViolated", "Disconnected", "OddCycle",
    "NotAutomorphism", "CompNotApplicable", "SearchBudgetExceeded", "BudgetExceeded", "NotEulerian",
    "Graph", "bipartition", "diameter", "is_connected", "line_graph",
    "LayerParams", "SubsetVertex", "build_b", "build_line_b", "middle_binomial_mod4",
    "Permutation", "fixed_vertex_for_involution",
    "automorphism_group", "regular_subgroup_search",
    "GF", "agl1", "find_irreducible",
    "cayley_graph", "is_cayley", "recognize_lb1", "semidirect_affine_construction",
    "line_b1_spectrum_report",
    "euler_circuit", "hamiltonian_cycle_of_line_graph", "validate_cycle",
]
