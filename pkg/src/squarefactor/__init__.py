"""Connected even factors with bounded maximum degree in graph squares.

The package finds [2,2s]-factors (spanning connected subgraphs with all
degrees even and at most 2s) in the square of a graph: constructively for
subdivided-star-free graphs and for graphs meeting a weaker block condition,
and by exhaustive oracle search at desk scale for everything else.
"""

from .graphs import (
    BlockDecomposition,
    Graph,
    GraphError,
    GraphFormatError,
    SizeLimitError,
    block_decomposition,
    branches_at,
    contract_pairs,
    format_dot,
    format_graph,
    glue,
    independence_number,
    induced_subgraph,
    is_nontrivial_at,
    parse_graph,
    square,
)
from .patterns import (
    StarEmbedding,
    find_induced_stars,
    is_star_free,
    make_star_subdivision,
    satisfies_block_condition,
)
from .trails import (
    EvenFactor,
    Trail,
    VerificationReport,
    boundary,
    concat_trails,
    factor_to_trail,
    format_factor,
    format_trail,
    parse_factor,
    symmetric_difference,
    trail_to_factor,
    verify_factor,
)
from .solver import (
    CLOSED_AT_ROOT,
    OPEN_TO_NEIGHBOR,
    ComponentSplit,
    HypothesisViolation,
    SolverBugError,
    TrailOutcome,
    block_double_path_cover,
    fleischner_cycle,
    lemma4_extract,
    lemma4_instance,
    lemma5_extract,
    lemma5_instance,
    oracle_factor,
    oracle_square_factor,
    path_cover,
    solve_condition,
    solve_star_free,
)

__version__ = "0.1.0"

__all__ = [
    "BlockDecomposition",
    "CLOSED_AT_ROOT",
    "ComponentSplit",
    "EvenFactor",
    "Graph",
    "GraphError",
    "GraphFormatError",
    "HypothesisViolation",
    "OPEN_TO_NEIGHBOR",
    "SizeLimitError",
    "SolverBugError",
    "StarEmbedding",
    "Trail",
    "TrailOutcome",
    "VerificationReport",
    "block_decomposition",
    "block_double_path_cover",
    "boundary",
    "branches_at",
    "concat_trails",
    "contract_pairs",
    "factor_to_trail",
    "find_induced_stars",
    "fleischner_cycle",
    "format_dot",
    "format_factor",
    "format_graph",
    "format_trail",
    "glue",
    "independence_number",
    "induced_subgraph",
    "is_nontrivial_at",
    "is_star_free",
    "lemma4_extract",
    "lemma4_instance",
    "lemma5_extract",
    "lemma5_instance",
    "make_star_subdivision",
    "oracle_factor",
    "oracle_square_factor",
    "parse_factor",
    "parse_graph",
    "path_cover",
    "satisfies_block_condition",
    "solve_condition",
    "solve_star_free",
    "square",
    "trail_to_factor",
    "verify_factor",
]
