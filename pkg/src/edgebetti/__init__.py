"""Graded Betti numbers of edge ideals, by homology and by formula."""
from .betti import (
    BettiTable,
    InconsistencyError,
    LexSegment,
    OracleCapError,
    StrandReport,
    beta_2_4_exact,
    beta_3_5_exact,
    betti_table_hochster,
    closed_form_complete,
    closed_form_complete_bipartite,
    has_linear_resolution,
    lex_segment,
    linear_strand_components,
    linear_strand_no_c4,
    lower_bound,
    strand_report,
    triangle_lower_bound,
    upper_bound,
)
from .census import (
    CensusReport,
    Pattern,
    UnsupportedPatternError,
    census,
    count_cliques,
    count_complete_bipartite,
    count_induced_cycles,
    count_induced_isomorphic,
    count_pattern_d,
    count_wheels_w4,
)
from .graph import (
    Graph,
    GraphInputError,
    complement,
    components,
    degree,
    has_induced_c4,
    induced_subgraph,
    is_chordal,
)
from .homology import GF2, RATIONALS, Field, clique_complex, rank_exact, reduced_homology_dims

__version__ = "0.1.0"
