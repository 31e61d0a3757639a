"""Exact coloring and domination for tournaments, with verifiable certificates.

The package revolves around partitioning tournaments into transitive pieces
(the dichromatic number), dominating sets in the relative sense, the
constructions that make those quantities large, and the local-to-global
arguments connecting them.  Every solver returns a witness that an
independent checker can verify.
"""

from .core import (
    DEFAULT_CHI_DP_THRESHOLD,
    DEFAULT_CHI_EXACT_LIMIT,
    DEFAULT_GAMMA_EXACT_LIMIT,
    ENV_EXACT_LIMIT,
    ExactLimitExceeded,
    FormatError,
    Graph,
    INFINITE_GIRTH,
    InvalidCharacterError,
    LengthMismatchError,
    MalformedHeaderError,
    SplitMix64,
    Tournament,
    VertexRangeError,
    check_subset,
    chi_exact_limit,
    closed_out_neighbors,
    full_mask,
    gamma_exact_limit,
    induce,
    is_transitive,
    iter_bits,
    members,
    out_neighbors,
    parse,
    parse_graph,
    random_tournament,
    serialize,
    serialize_graph,
    vset,
)
from .chromatic import (
    Coloring,
    dichromatic_bounds,
    dichromatic_number_exact,
    greedy_coloring,
    insertable,
    maximal_transitive_sets,
    triangle_packing,
    verify_coloring,
)
from .domination import (
    DominationWitness,
    check_inequality_1,
    check_inequality_2,
    domination_bounds,
    domination_number_exact,
    greedy_dominating_set,
    verify_domination,
)
from .constructions import (
    PatternMatch,
    contains_pattern,
    girth,
    orient_from_graph,
    paley_tournament,
    petersen_graph,
    random_graph_with_girth,
    s_tournament,
    verify_pattern,
)
from .localglobal import (
    ExactDominationInfeasible,
    ExtractionBranch,
    ExtractionTrace,
    GammaTooSmall,
    LocalColoringReport,
    MalformedTraceError,
    TheoremConstants,
    color_t_local,
    extract_high_chromatic,
    locality,
    locality_bounds,
    theorem_constants,
    trace_from_obj,
    trace_to_obj,
    validate_trace,
)
from .cli import SearchRecord, search_si_free

__version__ = "0.1.0"

__all__ = [
    "Coloring",
    "DominationWitness",
    "ExactDominationInfeasible",
    "ExactLimitExceeded",
    "ExtractionBranch",
    "ExtractionTrace",
    "FormatError",
    "GammaTooSmall",
    "Graph",
    "INFINITE_GIRTH",
    "InvalidCharacterError",
    "LengthMismatchError",
    "LocalColoringReport",
    "MalformedHeaderError",
    "MalformedTraceError",
    "PatternMatch",
    "SearchRecord",
    "SplitMix64",
    "TheoremConstants",
    "Tournament",
    "VertexRangeError",
    "check_inequality_1",
    "check_inequality_2",
    "check_subset",
    "chi_exact_limit",
    "closed_out_neighbors",
    "color_t_local",
    "contains_pattern",
    "dichromatic_bounds",
    "dichromatic_number_exact",
    "domination_bounds",
    "domination_number_exact",
    "extract_high_chromatic",
    "full_mask",
    "gamma_exact_limit",
    "girth",
    "greedy_coloring",
    "greedy_dominating_set",
    "induce",
    "insertable",
    "is_transitive",
    "iter_bits",
    "locality",
    "locality_bounds",
    "maximal_transitive_sets",
    "members",
    "orient_from_graph",
    "out_neighbors",
    "paley_tournament",
    "parse",
    "parse_graph",
    "petersen_graph",
    "random_graph_with_girth",
    "random_tournament",
    "s_tournament",
    "search_si_free",
    "serialize",
    "serialize_graph",
    "theorem_constants",
    "trace_from_obj",
    "trace_to_obj",
    "triangle_packing",
    "validate_trace",
    "verify_coloring",
    "verify_domination",
    "verify_pattern",
    "vset",
]
