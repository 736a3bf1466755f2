"""Certified monochromatic fractional triangle packings of 2-coloured
complete graphs: exact LP values, canonical forms, structural classifiers,
extremal constructions, and a threshold-pruned extension search."""

from .canonical import CanonicalKey, RelabelWitness, are_isomorphic, canonical_key
from .constructions import (
    B1,
    B2,
    TABLE1,
    BlobSpec,
    ab_packing,
    abc_packing,
    bipartite_minus_matching,
    flipped_blowup,
    pentagon_blowup,
    pentagon_pack_closed_form,
)
from .graph import (
    BLUE,
    RED,
    UNASSIGNED,
    ColoredGraph,
    GraphFormatError,
    edge_index,
    parse,
)
from .lp import (
    FractionalCover,
    FractionalPacking,
    PackValue,
    SolveResult,
    certified_exceeds,
    frac_decomposition,
    integer_nu,
    nu_star,
    pack,
    prescribed_packing,
)
from .search import (
    BipartiteFilter,
    PentagonFilter,
    SearchConfig,
    SearchReport,
    run_search,
)
from .structure import (
    BadConfiguration,
    BipartitionCert,
    PentagonCert,
    absorb_apex,
    bad_configurations,
    bip_distance_at_most,
    e_bip,
    max_disjoint_bad_configs,
    pentagon_distance,
)

__all__ = [
    "B1",
    "B2",
    "BLUE",
    "BadConfiguration",
    "BipartiteFilter",
    "BipartitionCert",
    "BlobSpec",
    "CanonicalKey",
    "ColoredGraph",
    "FractionalCover",
    "FractionalPacking",
    "GraphFormatError",
    "PackValue",
    "PentagonCert",
    "PentagonFilter",
    "RED",
    "RelabelWitness",
    "SearchConfig",
    "SearchReport",
    "SolveResult",
    "TABLE1",
    "UNASSIGNED",
    "ab_packing",
    "abc_packing",
    "absorb_apex",
    "are_isomorphic",
    "bad_configurations",
    "bip_distance_at_most",
    "bipartite_minus_matching",
    "canonical_key",
    "certified_exceeds",
    "e_bip",
    "edge_index",
    "flipped_blowup",
    "frac_decomposition",
    "integer_nu",
    "max_disjoint_bad_configs",
    "nu_star",
    "pack",
    "parse",
    "pentagon_blowup",
    "pentagon_distance",
    "pentagon_pack_closed_form",
    "prescribed_packing",
    "run_search",
]
