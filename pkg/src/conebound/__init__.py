"""Spectral checks of -λmin·λmax >= Δ on simple graphs."""

__version__ = "0.1.0"

from .bounds import (
    BoundReport,
    Comparison,
    EqualityWitness,
    bipartite_product_bound,
    compare_bounds,
    crossover_alpha_threshold,
    equality_structure_check,
    haemers_bound,
    phi,
    product_bound_report,
)
from .enumeration import enumerate_connected, independence_number
from .families import FamilySpec, make_family, parse_family_spec
from .graph import (
    Graph,
    GraphError,
    StructuralProfile,
    cone,
    graph_from_edges,
    induced_subgraph,
    profile,
)
from .graph6 import parse_graph6, to_graph6
from .interlacing import (
    Partition,
    QuotientMatrix,
    interlaces,
    is_equitable,
    quotient_matrix,
    tight_interlacing_index,
)
from .spectra import Spectrum, cone_spectrum_predicted, eigenvalues_sym, spectrum
from .survey import SurveyRow, survey
