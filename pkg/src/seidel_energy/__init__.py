"""Vertex Seidel energy: the diagonal of |S(G)| for the Seidel matrix S = J - I - 2A."""

from .coulson import CoulsonResult, QuadratureConfig, coulson_energies, coulson_energy, coulson_integrand
from .energy import (
    Constancy,
    EnergyReport,
    closed_form,
    constancy_diagnostic,
    energy_report,
    holder_lower_bound,
    total_energy,
    two_abs_value_energy,
    upper_bound_check,
    vertex_energies,
    vertex_energy,
)
from .errors import (
    ConvergenceError,
    GraphParseError,
    InvalidOrderError,
    InvalidParameterError,
    NearPoleError,
    SeidelError,
    UnsupportedFieldError,
)
from .graph import (
    Graph,
    complement,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    figure1_order6,
    modified_petersen,
    paley_graph,
    random_graph,
    seidel_switch,
)
from .graph_io import parse_edge_list, parse_graph6, write_edge_list, write_graph6
from .spectral import (
    EigenDecomposition,
    abs_matrix,
    char_poly_at,
    char_poly_minor_at,
    diag_power,
    eigen_decompose,
    seidel_matrix,
)

__version__ = "0.1.0"
