"""Competition graphs of digraphs with bounded in- and outdegree."""

from .chordality import (
    P22,
    TRIANGLE_PATTERNS,
    GoodSubdigraphReport,
    chordal_iff_no_good,
    find_good_subdigraph,
    find_hole,
    induces_triangle,
    interval_22,
    is_chordal,
    is_irredundant,
)
from .cover import (
    CliqueCover,
    HallViolation,
    RepairResult,
    SdrAssignment,
    find_sdr,
    repair_cover,
    search_cover,
    subsets_lemma_index,
    validate_cover,
    witness_digraph,
)
from .designs import (
    Bibd,
    bibd_to_digraph,
    clique_bound,
    extract_bibd,
    fano_plane,
    fisher_check,
    pair_design,
    steiner_triple,
    verify_bibd,
)
from .errors import ParseError, SizeGuardError
from .families import (
    ContainmentVerdict,
    containment,
    double_clique,
    hamming_graph,
    separation_witness,
    star_of_cliques,
)
from .graphs import (
    DegreeBounds,
    Digraph,
    Graph,
    competition_graph,
    graph_stats,
    is_ij_digraph,
    is_k1t_free,
    necessary_conditions,
)
from .recognition import RecognitionCertificate, recognize, recognize_1j, recognize_i1

__version__ = "0.1.0"

__all__ = [
    "Bibd",
    "bibd_to_digraph",
    "chordal_iff_no_good",
    "clique_bound",
    "CliqueCover",
    "competition_graph",
    "containment",
    "ContainmentVerdict",
    "DegreeBounds",
    "Digraph",
    "double_clique",
    "extract_bibd",
    "fano_plane",
    "find_good_subdigraph",
    "find_hole",
    "find_sdr",
    "fisher_check",
    "GoodSubdigraphReport",
    "Graph",
    "graph_stats",
    "HallViolation",
    "hamming_graph",
    "induces_triangle",
    "interval_22",
    "is_chordal",
    "is_ij_digraph",
    "is_irredundant",
    "is_k1t_free",
    "necessary_conditions",
    "P22",
    "pair_design",
    "ParseError",
    "RecognitionCertificate",
    "recognize",
    "recognize_1j",
    "recognize_i1",
    "repair_cover",
    "RepairResult",
    "SdrAssignment",
    "search_cover",
    "separation_witness",
    "SizeGuardError",
    "star_of_cliques",
    "steiner_triple",
    "subsets_lemma_index",
    "TRIANGLE_PATTERNS",
    "validate_cover",
    "verify_bibd",
    "witness_digraph",
]
