"""Extremal polyhedral graphs containing k-independent sets."""

from .analysis import (
    ShellDecomposition,
    UnsupportedSizeError,
    VerificationReport,
    all_pairs_distances,
    distance_shells,
    graph_power,
    has_separating_quadrilateral,
    is_k_connected,
    is_maximal_planar,
    is_planar,
    is_polyhedral,
    is_quadrangulation,
    k_independence_number,
    max_independent_set,
    verify_certificate,
)
from .constructions import (
    ExtremalInstance,
    PSite,
    base_graph,
    build_extremal,
    check_odd_corollary,
    find_p_site,
    k4_necklace,
    p_formula,
    radial_graph,
    transform_p,
    transform_q,
)
from .core import (
    CanonCode,
    ColoredGraph,
    Embedding,
    Graph,
    GraphError,
    are_isomorphic,
    canonical_form,
    faces,
    graph_new,
)
from .enumeration import (
    GenerationRun,
    classify_extremal,
    enumerate_polyhedra,
    enumerate_triangulations,
    flip,
    minimality_oracle,
)

__version__ = "0.1.0"
