"""Generalized Turan numbers for cliques under a bounded matching number."""

from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("artifact")
except PackageNotFoundError:
    __version__ = "0.0.0"

from .closed_forms import (
    TheoremValue,
    bipartite_slope,
    crossover,
    delta_recurrences_check,
    f_value,
    g_value,
    matching_only_value,
    monotonicity_convexity_check,
    theorem_value_kk,
    turan_clique_count,
)
from .constructions import (
    PartitionSpec,
    complete_multipartite,
    d_h_graph,
    g_graph,
    matching_graph,
    turan_graph,
)
from .graph import (
    Graph,
    clique_degree,
    count_cliques,
    disjoint_union,
    induced_subgraph,
    join,
    neighborhood_classes,
    switch_class,
    switch_vertex,
)
from .graph6 import decode_graph6, encode_graph6
from .matching import BergeCertificate, berge_certificate, max_matching, verify_certificate
from .oracle import (
    ExtremalReport,
    ForbiddenSet,
    chromatic_number,
    color_family,
    contains_subgraph,
    extremal_search,
    is_family_free,
    p_value,
)
from .symmetrize import SymmetrizeTrace, symmetrize
