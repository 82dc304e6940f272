"""Scarf complexes of finite posets and their realization by bipartite digraphs."""

from .errors import ScarfError
from .families import (
    antichain,
    complete_bipartite_digraph,
    digraph_poset,
    direct_sum,
    divisibility_closure,
    even_cycle_digraph,
    ordinal_sum,
    powerset_closure,
    type_a_root_poset,
)
from .poset import IdealDecomposition, Poset, ideal_decomposition, order_ideal
from .realization import (
    RealizationOutput,
    RoundtripReport,
    maximal_faces,
    realize_complex,
    roundtrip_verify,
)
from .scarf import (
    ScarfResult,
    SimplicialComplex,
    WitnessCertificate,
    closed_faces,
    complexes_isomorphic,
    f_vector,
    is_neighborly,
    oracle_scarf,
    scarf,
    scarf_facets,
)

__version__ = "0.1.0"

__all__ = [
    "IdealDecomposition",
    "Poset",
    "RealizationOutput",
    "RoundtripReport",
    "ScarfError",
    "ScarfResult",
    "SimplicialComplex",
    "WitnessCertificate",
    "antichain",
    "closed_faces",
    "complete_bipartite_digraph",
    "complexes_isomorphic",
    "digraph_poset",
    "direct_sum",
    "divisibility_closure",
    "even_cycle_digraph",
    "f_vector",
    "ideal_decomposition",
    "is_neighborly",
    "maximal_faces",
    "oracle_scarf",
    "ordinal_sum",
    "order_ideal",
    "powerset_closure",
    "realize_complex",
    "roundtrip_verify",
    "scarf",
    "scarf_facets",
    "type_a_root_poset",
]
