"""Pattern-avoiding matchings: enumeration, generating trees, path-pair bijections.

The package keeps several independent routes to the same numbers on
purpose: brute-force streaming counts, generating-tree leaf counts, a
dominated-path lattice count, and explicit bijections between them.
``matchkit verify`` cross-checks them all.
"""
from .core import (
    CHAINS,
    ChainFamily,
    DyckWord,
    Edge,
    EdgeRelation,
    Matching,
    PrefixGraph,
    StubBlocks,
    avoids,
    base,
    chain,
    contains,
    contains_edges,
    edge_relation,
    expand_patterns,
    induced_matching,
    is_dyck_word,
    mirror,
    mirror_word,
    parse_matching,
    pattern_label,
    permutational,
    prefix,
)
from .dyckbij import (
    NoncrossingPair,
    ShortLongSplit,
    TunnelTable,
    avoids231_by_split,
    count_noncrossing,
    dominates,
    enumerate_noncrossing,
    matching_from_pair,
    path_from_matching,
    split_short_long,
    tunnels,
)
from .enumeration import (
    CountTable,
    RelationVerdict,
    a005700,
    catalan,
    classify_relation,
    count_avoiders,
    count_table,
    enumerate_bases,
    enumerate_matchings,
    enumerate_matchings_of_size,
)
from .ferrers import (
    FerrersShape,
    Transversal,
    base_word_for_shape,
    matching_to_transversal,
    shape_from_base,
    transversal_to_matching,
)
from .gentree import (
    PhiNodePair,
    PhiWitness,
    TreeKind,
    TreeNode,
    approx_blocks,
    build_tree,
    children,
    greedy_completion,
    is_node,
    iter_leaves,
    leaf_count,
    phi,
    sim_blocks,
    stub_blocks,
)
from .limits import BoundExceededError
from .render import dot_tree, svg_matching, svg_pair
from .report import write_report

__version__ = "0.1.0"

__all__ = [
    "CHAINS",
    "ChainFamily",
    "DyckWord",
    "Edge",
    "EdgeRelation",
    "Matching",
    "PrefixGraph",
    "StubBlocks",
    "avoids",
    "base",
    "chain",
    "contains",
    "contains_edges",
    "edge_relation",
    "expand_patterns",
    "induced_matching",
    "is_dyck_word",
    "mirror",
    "mirror_word",
    "parse_matching",
    "pattern_label",
    "permutational",
    "prefix",
    "NoncrossingPair",
    "ShortLongSplit",
    "TunnelTable",
    "avoids231_by_split",
    "count_noncrossing",
    "dominates",
    "enumerate_noncrossing",
    "matching_from_pair",
    "path_from_matching",
    "split_short_long",
    "tunnels",
    "CountTable",
    "RelationVerdict",
    "a005700",
    "catalan",
    "classify_relation",
    "count_avoiders",
    "count_table",
    "enumerate_bases",
    "enumerate_matchings",
    "enumerate_matchings_of_size",
    "FerrersShape",
    "Transversal",
    "base_word_for_shape",
    "matching_to_transversal",
    "shape_from_base",
    "transversal_to_matching",
    "PhiNodePair",
    "PhiWitness",
    "TreeKind",
    "TreeNode",
    "approx_blocks",
    "build_tree",
    "children",
    "greedy_completion",
    "is_node",
    "iter_leaves",
    "leaf_count",
    "phi",
    "sim_blocks",
    "stub_blocks",
    "BoundExceededError",
    "dot_tree",
    "svg_matching",
    "svg_pair",
    "write_report",
    "__version__",
]
