"""Generating trees for the avoiders of a fixed base word.

Fix a Dyck word w of length n.  Nodes at level k are the prefix graphs
on 1..k that can be completed to an avoider with base w; the children of
a node extend it by vertex k+1.  Two tree kinds share this scaffold:

* ``TM`` grows the avoiders of the single pattern 132 (edges
  {1,4},{2,6},{3,5}).  Its stub relation groups two stubs together when
  some closed edge spans both; an r-step closes the *smallest* stub of
  each group.
* ``TC`` grows the avoiders of the whole chain family C_3, C_4, ...
  Its stub relation groups consecutive stubs when every vertical cut
  between them is spanned by a closed edge; an r-step closes the
  *biggest* stub of each group.

Both rules produce one child per block at an r-step and exactly one
child at an l-step, and the two trees for the same word are isomorphic
level by level with matching block sizes; ``phi`` materializes that
isomorphism and the leaf bijection it induces.
"""
from __future__ import annotations

import enum
import itertools
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Iterator, Union

from .core import (
    CHAINS,
    DyckWord,
    Matching,
    PrefixGraph,
    StubBlocks,
    as_word,
    contains_edges,
    expand_patterns,
    permutational,
)
from .limits import check_size, tree_limit

__all__ = [
    "TreeKind",
    "TreeNode",
    "PhiNodePair",
    "PhiWitness",
    "sim_blocks",
    "approx_blocks",
    "stub_blocks",
    "is_node",
    "children",
    "build_tree",
    "leaf_count",
    "iter_leaves",
    "phi",
    "greedy_completion",
]

_M132 = permutational("132")


class TreeKind(enum.Enum):
    """Which avoider family a generating tree enumerates."""

    TM = "TM"  # single pattern 132
    TC = "TC"  # chain family C_3, C_4, ...


def sim_blocks(g: PrefixGraph) -> StubBlocks:
    """Group stubs that share a covering edge, closed transitively.

    Every closed edge (a, b) puts all stubs strictly inside (a, b) into
    one group.  Groups are always contiguous runs of the stub list.
    """
    stubs = g.stubs
    parent = list(range(len(stubs)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for a, b in g.closed_edges:
        lo = bisect_right(stubs, a)
        hi = bisect_left(stubs, b)
        for i in range(lo + 1, hi):  # chain-union the run inside (a, b)
            ra, rb = find(i - 1), find(i)
            if ra != rb:
                parent[rb] = ra
    blocks: list[list[int]] = []
    for i, s in enumerate(stubs):
        if i > 0 and find(i) == find(i - 1):
            blocks[-1].append(s)
        else:
            blocks.append([s])
    return StubBlocks("sim", tuple(tuple(b) for b in blocks))


def approx_blocks(g: PrefixGraph) -> StubBlocks:
    """Group consecutive stubs whenever no vertical cut separates them.

    A cut between positions t and t+1 is spanned when some closed edge
    (a, b) has a <= t < b.  Two consecutive stubs fall in one group iff
    every cut between them is spanned.
    """
    stubs = g.stubs
    spanned = [0] * (g.k + 2)  # spanned[t] != 0 once prefix-summed: cut t..t+1 is covered
    for a, b in g.closed_edges:
        spanned[a] += 1
        spanned[b] -= 1
    unspanned_before = [0] * (g.k + 2)  # number of uncovered cuts with index <= t
    running = 0
    for t in range(1, g.k + 1):
        running += spanned[t]
        unspanned_before[t] = unspanned_before[t - 1] + (1 if running <= 0 else 0)
    blocks: list[list[int]] = []
    for i, s in enumerate(stubs):
        if i > 0:
            prev = stubs[i - 1]
            if unspanned_before[s - 1] - unspanned_before[prev - 1] == 0:
                blocks[-1].append(s)
                continue
        blocks.append([s])
    return StubBlocks("approx", tuple(tuple(b) for b in blocks))


def stub_blocks(g: PrefixGraph, kind: TreeKind) -> StubBlocks:
    return sim_blocks(g) if kind is TreeKind.TM else approx_blocks(g)


def _edges_avoid(edges: tuple, kind: TreeKind) -> bool:
    if kind is TreeKind.TM:
        return not contains_edges(edges, _M132)
    return not any(contains_edges(edges, c) for c in expand_patterns(CHAINS, len(edges)))


def _has_forbidden_stub(g: PrefixGraph, kind: TreeKind) -> bool:
    edges, stubs = g.closed_edges, g.stubs
    if kind is TreeKind.TM:
        # a stub strictly between the left endpoints of a crossing pair
        for (a, b), (c, d) in itertools.combinations(edges, 2):
            if c < b < d and any(a < s < c for s in stubs):
                return True
        return False
    # a stub that would close a chain: p-1 chain-shaped edges plus a stub
    # sitting where the chain's second-to-last vertex belongs
    for p in range(3, len(edges) + 2):
        for combo in itertools.combinations(edges, p - 1):
            verts = sorted(v for e in combo for v in e)
            lo, hi = verts[2 * p - 5], verts[2 * p - 4]
            for s in stubs:
                if not lo < s < hi:
                    continue
                xs = sorted(verts + [s])
                want = {(xs[2 * i - 2], xs[2 * i + 1]) for i in range(1, p - 1)}
                want.add((xs[1], xs[2 * p - 2]))
                if set(combo) == want:
                    return True
    return False


def is_node(g: PrefixGraph, kind: TreeKind) -> bool:
    """Can this prefix be completed to an avoider with its word as base?

    False when the vertex roles disagree with the word, when the closed
    edges already contain the forbidden pattern(s), or when some stub is
    trapped so that any completion would create the pattern.
    """
    if not g.is_consistent_with_base():
        return False
    if not _edges_avoid(g.closed_edges, kind):
        return False
    return not _has_forbidden_stub(g, kind)


def _children(g: PrefixGraph, kind: TreeKind, blocks: StubBlocks | None = None) -> list[PrefixGraph]:
    v = g.k + 1
    if g.word.bits[v - 1] == "0":
        return [g.append_stub()]
    if blocks is None:
        blocks = stub_blocks(g, kind)
    if kind is TreeKind.TM:
        return [g.close_stub(block[0]) for block in blocks.blocks]
    return [g.close_stub(block[-1]) for block in blocks.blocks]


def children(g: PrefixGraph, kind: TreeKind) -> list[PrefixGraph]:
    """The nodes extending ``g`` by one vertex, ordered by block."""
    if g.is_complete:
        raise ValueError("prefix is already a complete matching")
    if not is_node(g, kind):
        raise ValueError(f"prefix is not a node of the {kind.value} tree")
    return _children(g, kind)


@dataclass(frozen=True)
class TreeNode:
    """A materialized tree node: its prefix, its stub blocks, its children."""

    graph: PrefixGraph
    blocks: StubBlocks
    children: tuple["TreeNode", ...]

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def node_count(self) -> int:
        return 1 + sum(c.node_count() for c in self.children)


def build_tree(w: Union[DyckWord, str], kind: TreeKind) -> TreeNode:
    """Materialize the whole tree for ``w``, children ordered by block."""
    word = as_word(w)
    check_size(word.size, tree_limit(), "tree construction")

    def build(g: PrefixGraph) -> TreeNode:
        blocks = stub_blocks(g, kind)
        if g.is_complete:
            return TreeNode(g, blocks, ())
        kids = tuple(build(c) for c in _children(g, kind, blocks))
        return TreeNode(g, blocks, kids)

    return build(PrefixGraph.empty(word))


def leaf_count(w: Union[DyckWord, str], kind: TreeKind) -> int:
    """Number of leaves of the tree for ``w`` without materializing it."""
    word = as_word(w)
    check_size(word.size, tree_limit(), "tree traversal")
    count = 0
    stack = [PrefixGraph.empty(word)]
    while stack:
        g = stack.pop()
        if g.is_complete:
            count += 1
        else:
            stack.extend(_children(g, kind))
    return count


def iter_leaves(node: TreeNode) -> Iterator[Matching]:
    """The leaf matchings of a materialized tree, left to right."""
    if node.is_leaf:
        yield node.graph.to_matching()
        return
    for child in node.children:
        yield from iter_leaves(child)


@dataclass(frozen=True)
class PhiNodePair:
    """One step of the paired traversal, with both block-size records."""

    left: PrefixGraph  # node of the TM tree
    right: PrefixGraph  # node of the TC tree
    left_block_sizes: tuple[int, ...]
    right_block_sizes: tuple[int, ...]


@dataclass(frozen=True)
class PhiWitness:
    """A full record of the isomorphism between the two trees of one word."""

    word: DyckWord
    node_pairs: tuple[PhiNodePair, ...]
    leaf_pairs: tuple[tuple[Matching, Matching], ...]

    def leaf_map_json(self) -> dict:
        return {
            "schema_version": "1",
            "kind": "leaf_bijection",
            "base": self.word.bits,
            "pairs": [
                {"avoider_132": str(a), "avoider_chain": str(b)}
                for a, b in self.leaf_pairs
            ],
        }


def phi(w: Union[DyckWord, str]) -> PhiWitness:
    """Walk both trees in lockstep, pairing the i-th child with the i-th child.

    The block-size sequences of paired nodes always agree; a mismatch
    would mean the succession rules are broken, so it raises.
    """
    word = as_word(w)
    check_size(word.size, tree_limit(), "tree traversal")
    pairs: list[PhiNodePair] = []
    leaves: list[tuple[Matching, Matching]] = []

    def walk(g: PrefixGraph, h: PrefixGraph) -> None:
        gb = sim_blocks(g)
        hb = approx_blocks(h)
        if gb.sizes() != hb.sizes():
            raise RuntimeError(
                f"block sizes diverged at level {g.k} of {word}: "
                f"{gb.sizes()} vs {hb.sizes()}"
            )
        pairs.append(PhiNodePair(g, h, gb.sizes(), hb.sizes()))
        if g.is_complete:
            leaves.append((g.to_matching(), h.to_matching()))
            return
        for gc, hc in zip(
            _children(g, TreeKind.TM, gb), _children(h, TreeKind.TC, hb), strict=True
        ):
            walk(gc, hc)

    root = PrefixGraph.empty(word)
    walk(root, root)
    return PhiWitness(word, tuple(pairs), tuple(leaves))


def greedy_completion(g: PrefixGraph, kind: TreeKind) -> Matching:
    """Finish a node by always closing the smallest (TM) or biggest (TC) stub."""
    if not is_node(g, kind):
        raise ValueError(f"prefix is not a node of the {kind.value} tree")
    bits = g.word.bits
    edges = list(g.closed_edges)
    stubs = list(g.stubs)
    for v in range(g.k + 1, g.n + 1):
        if bits[v - 1] == "0":
            stubs.append(v)
        elif kind is TreeKind.TM:
            edges.append((stubs.pop(0), v))
        else:
            edges.append((stubs.pop(), v))
    return Matching(tuple(edges))
