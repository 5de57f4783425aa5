"""Value types for matchings, Dyck words and their prefixes.

A matching of size ``m`` is a perfect matching of the vertex set
``1..2m`` drawn on a line: every vertex is an endpoint of exactly one
edge.  The smaller endpoint of an edge is its l-vertex, the bigger one
its r-vertex.  Reading the vertices left to right and writing ``0`` for
an l-vertex and ``1`` for an r-vertex yields the *base* of the matching,
a Dyck word of length ``2m``.

Everything here is an immutable value: edges are canonicalized to
``(small, big)`` pairs sorted by left endpoint, so equality and hashing
behave structurally.  Vertices are 1-based throughout.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence, Union

Edge = tuple[int, int]

__all__ = [
    "Edge",
    "Matching",
    "DyckWord",
    "PrefixGraph",
    "StubBlocks",
    "EdgeRelation",
    "ChainFamily",
    "CHAINS",
    "PatternLike",
    "parse_matching",
    "as_word",
    "is_dyck_word",
    "base",
    "permutational",
    "chain",
    "mirror",
    "mirror_word",
    "edge_relation",
    "contains",
    "contains_edges",
    "avoids",
    "expand_patterns",
    "pattern_label",
    "induced_matching",
    "prefix",
]


def _as_edge(e: Iterable[int]) -> Edge:
    vs = sorted(int(v) for v in e)
    if len(vs) != 2:
        raise ValueError(f"an edge needs exactly two endpoints, got {tuple(e)!r}")
    a, b = vs
    if a == b:
        raise ValueError(f"edge endpoints must differ, got {a}-{b}")
    if a < 1:
        raise ValueError(f"vertices are 1-based, got {a}")
    return (a, b)


@dataclass(frozen=True)
class Matching:
    """A perfect matching of ``1..2m``, kept in canonical edge order."""

    edges: tuple[Edge, ...]
    _partner: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        edges = tuple(sorted(_as_edge(e) for e in self.edges))
        seen: dict[int, int] = {}
        for a, b in edges:
            for v in (a, b):
                if v in seen:
                    raise ValueError(f"duplicate vertex {v}")
                seen[v] = 0
        n = 2 * len(edges)
        for v in seen:
            if v > n:
                raise ValueError(
                    f"vertices must be exactly 1..{n}, got {v}"
                )
        partner = {}
        for a, b in edges:
            partner[a] = b
            partner[b] = a
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "_partner", partner)

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def n(self) -> int:
        return 2 * len(self.edges)

    @property
    def l_vertices(self) -> tuple[int, ...]:
        # canonical order means the left endpoints come out ascending
        return tuple(a for a, _ in self.edges)

    @property
    def r_vertices(self) -> tuple[int, ...]:
        return tuple(sorted(b for _, b in self.edges))

    def partner(self, v: int) -> int:
        try:
            return self._partner[v]
        except KeyError:
            raise ValueError(f"vertex {v} is not in 1..{self.n}") from None

    def __str__(self) -> str:
        return ",".join(f"{a}-{b}" for a, b in self.edges)


def parse_matching(text: str) -> Matching:
    """Parse ``"1-4,2-6,3-5"`` into a matching; the empty string is size 0."""
    text = text.strip()
    if not text:
        return Matching(())
    edges = []
    for tok in text.split(","):
        parts = tok.strip().split("-")
        if len(parts) != 2:
            raise ValueError(f"bad edge token {tok.strip()!r}, expected i-j")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(f"bad edge token {tok.strip()!r}, expected i-j") from None
    return Matching(tuple(edges))


def is_dyck_word(bits) -> bool:
    """True when the input is a balanced 0/1 word whose prefixes never dip."""
    if isinstance(bits, DyckWord):
        return True
    if isinstance(bits, str):
        chars = bits
    else:
        try:
            chars = "".join(str(int(b)) for b in bits)
        except (TypeError, ValueError):
            return False
    h = 0
    for c in chars:
        if c == "0":
            h += 1
        elif c == "1":
            h -= 1
            if h < 0:
                return False
        else:
            return False
    return h == 0


@dataclass(frozen=True)
class DyckWord:
    """A balanced 0/1 word with no prefix holding more 1s than 0s."""

    bits: str

    def __post_init__(self) -> None:
        if not isinstance(self.bits, str) or not is_dyck_word(self.bits):
            raise ValueError(f"not a Dyck word: {self.bits!r}")

    @classmethod
    def from_text(cls, text: str) -> "DyckWord":
        """Accept 0/1 or U/D (case-insensitive) on input."""
        table = {"0": "0", "1": "1", "U": "0", "D": "1"}
        try:
            bits = "".join(table[c] for c in text.strip().upper())
        except KeyError:
            raise ValueError(f"not a Dyck word: {text!r}") from None
        return cls(bits)

    @property
    def size(self) -> int:
        return len(self.bits) // 2

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return self.bits

    def heights(self) -> tuple[int, ...]:
        """Partial heights h(0)=0, h(i) after the i-th step."""
        hs = [0]
        for c in self.bits:
            hs.append(hs[-1] + (1 if c == "0" else -1))
        return tuple(hs)

    @property
    def l_positions(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.bits, start=1) if c == "0")

    @property
    def r_positions(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.bits, start=1) if c == "1")

    def mirror(self) -> "DyckWord":
        return DyckWord("".join("1" if c == "0" else "0" for c in reversed(self.bits)))


def as_word(w: Union[DyckWord, str]) -> DyckWord:
    return w if isinstance(w, DyckWord) else DyckWord.from_text(w)


def base(m: Matching) -> DyckWord:
    lefts = set(m.l_vertices)
    return DyckWord("".join("0" if v in lefts else "1" for v in range(1, m.n + 1)))


def permutational(pi: Union[Sequence[int], str]) -> Matching:
    """The matching with edges ``{i, m + pi(i)}`` for a permutation of 1..m.

    A string of digits is accepted for sizes up to 9: ``permutational("132")``.
    """
    if isinstance(pi, str):
        pi = tuple(int(c) for c in pi.strip())
    pi = tuple(int(v) for v in pi)
    m = len(pi)
    if sorted(pi) != list(range(1, m + 1)):
        raise ValueError(f"not a permutation of 1..{m}: {pi}")
    return Matching(tuple((i, m + pi[i - 1]) for i in range(1, m + 1)))


@lru_cache(maxsize=None)
def chain(k: int) -> Matching:
    """The k-edge chain: edges {2i-1, 2i+2} for i < k, closed by {2, 2k-1}."""
    if k < 3:
        raise ValueError("chain size must be at least 3")
    edges = [(2 * i - 1, 2 * i + 2) for i in range(1, k)]
    edges.append((2, 2 * k - 1))
    return Matching(tuple(edges))


class ChainFamily:
    """Symbolic stand-in for all chains C_3, C_4, ...

    Pattern checks against the family expand it to the chains that can
    embed in the ambient size, so membership depends only on sizes that
    matter.
    """

    def members(self, max_size: int) -> tuple[Matching, ...]:
        return _chains_up_to(max_size)

    def __repr__(self) -> str:
        return "ChainFamily()"


CHAINS = ChainFamily()

PatternLike = Union[Matching, ChainFamily]


@lru_cache(maxsize=None)
def _chains_up_to(size: int) -> tuple[Matching, ...]:
    return tuple(chain(k) for k in range(3, size + 1))


def expand_patterns(patterns, size: int) -> tuple[Matching, ...]:
    """Flatten a pattern collection, expanding chain families up to ``size``."""
    if isinstance(patterns, (Matching, ChainFamily)):
        patterns = (patterns,)
    out: list[Matching] = []
    for p in patterns:
        if isinstance(p, ChainFamily):
            out.extend(p.members(size))
        elif isinstance(p, Matching):
            out.append(p)
        else:
            raise TypeError(f"not a pattern: {p!r}")
    return tuple(out)


def pattern_label(patterns) -> str:
    """A short, deterministic name for a pattern set ("132", "C4", "Cfam", ...)."""
    if isinstance(patterns, (Matching, ChainFamily)):
        patterns = (patterns,)
    parts = []
    for p in patterns:
        if isinstance(p, ChainFamily):
            parts.append("Cfam")
            continue
        m = p.size
        if m == 0:
            parts.append("empty")
        elif p.l_vertices == tuple(range(1, m + 1)) and m <= 9:
            parts.append("".join(str(p.partner(i) - m) for i in range(1, m + 1)))
        elif m >= 3 and p == chain(m):
            parts.append(f"C{m}")
        else:
            parts.append(str(p) or "empty")
    return "+".join(parts)


def mirror(m: Matching) -> Matching:
    n = m.n
    return Matching(tuple((n + 1 - b, n + 1 - a) for a, b in m.edges))


def mirror_word(w: Union[DyckWord, str]) -> DyckWord:
    return as_word(w).mirror()


@dataclass(frozen=True)
class EdgeRelation:
    """How two vertex-disjoint edges sit relative to each other."""

    kind: str  # "crossing" | "nested" | "disjoint"
    outer: Edge | None = None  # the enclosing edge when nested

    def __post_init__(self) -> None:
        if self.kind not in ("crossing", "nested", "disjoint"):
            raise ValueError(f"unknown relation kind {self.kind!r}")
        if (self.kind == "nested") != (self.outer is not None):
            raise ValueError("exactly the nested relation carries an outer edge")


def edge_relation(e1: Iterable[int], e2: Iterable[int]) -> EdgeRelation:
    """Classify two disjoint edges as crossing, nested or disjoint."""
    a1, b1 = _as_edge(e1)
    a2, b2 = _as_edge(e2)
    if {a1, b1} & {a2, b2}:
        raise ValueError(f"edges {a1}-{b1} and {a2}-{b2} share a vertex")
    if a2 < a1:
        (a1, b1), (a2, b2) = (a2, b2), (a1, b1)
    if b1 < a2:
        return EdgeRelation("disjoint")
    if b1 < b2:
        return EdgeRelation("crossing")
    return EdgeRelation("nested", outer=(a1, b1))


def induced_matching(edges: Iterable[Iterable[int]]) -> Matching:
    """Relabel a vertex-disjoint edge set order-preservingly onto 1..2p."""
    canon = sorted(_as_edge(e) for e in edges)
    verts = sorted(v for e in canon for v in e)
    if len(set(verts)) != len(verts):
        raise ValueError("edges are not vertex-disjoint")
    rank = {v: i for i, v in enumerate(verts, start=1)}
    return Matching(tuple((rank[a], rank[b]) for a, b in canon))


def contains_edges(edges: Iterable[Iterable[int]], pattern: Matching) -> bool:
    """True when some subset of the edges induces the pattern's shape.

    Works for any vertex-disjoint edge collection, so prefixes with
    stubs can be tested too (stubs never take part in a full pattern).
    """
    canon = tuple(sorted(_as_edge(e) for e in edges))
    p = pattern.size
    if p == 0:
        return True
    if p > len(canon):
        return False
    target = pattern.edges
    for combo in itertools.combinations(canon, p):
        verts = sorted(v for e in combo for v in e)
        rank = {v: i for i, v in enumerate(verts, start=1)}
        # combo is ordered by left endpoint and rank is monotone, so the
        # mapped edges are already in canonical order
        if tuple((rank[a], rank[b]) for a, b in combo) == target:
            return True
    return False


def contains(m: Matching, pattern: Matching) -> bool:
    """True when ``m`` has edges forming the same crossing/nesting shape."""
    return contains_edges(m.edges, pattern)


def avoids(m: Matching, patterns) -> bool:
    """True when ``m`` contains none of the patterns (families expand to m's size)."""
    return not any(contains(m, p) for p in expand_patterns(patterns, m.size))


@dataclass(frozen=True)
class PrefixGraph:
    """The first ``k`` vertices of a (potential) matching with base ``word``.

    Edges with both endpoints inside 1..k are closed; l-vertices whose
    partner lies beyond k are stubs.  Construction checks only the
    graph structure (disjoint edges plus stubs covering 1..k exactly);
    whether vertex roles agree with the stored word is a separate query,
    so that inconsistent candidates can be represented and rejected.
    """

    word: DyckWord
    k: int
    closed_edges: tuple[Edge, ...]
    stubs: tuple[int, ...]

    def __post_init__(self) -> None:
        edges = tuple(sorted(_as_edge(e) for e in self.closed_edges))
        stubs = tuple(sorted(int(s) for s in self.stubs))
        n = len(self.word)
        if not 0 <= self.k <= n:
            raise ValueError(f"k must lie in 0..{n}, got {self.k}")
        used: list[int] = [v for e in edges for v in e]
        used.extend(stubs)
        if len(set(used)) != len(used):
            raise ValueError("edges and stubs overlap")
        if sorted(used) != list(range(1, self.k + 1)):
            raise ValueError(f"edges and stubs must cover 1..{self.k} exactly")
        object.__setattr__(self, "closed_edges", edges)
        object.__setattr__(self, "stubs", stubs)

    @property
    def n(self) -> int:
        return len(self.word)

    @property
    def is_complete(self) -> bool:
        return self.k == self.n

    @classmethod
    def empty(cls, word: Union[DyckWord, str]) -> "PrefixGraph":
        return cls(as_word(word), 0, (), ())

    def is_consistent_with_base(self) -> bool:
        """Do the vertex roles match the stored word position by position?"""
        bits = self.word.bits
        if any(bits[s - 1] != "0" for s in self.stubs):
            return False
        return all(bits[a - 1] == "0" and bits[b - 1] == "1" for a, b in self.closed_edges)

    def append_stub(self) -> "PrefixGraph":
        v = self.k + 1
        return PrefixGraph(self.word, v, self.closed_edges, self.stubs + (v,))

    def close_stub(self, x: int) -> "PrefixGraph":
        if x not in self.stubs:
            raise ValueError(f"{x} is not a stub")
        v = self.k + 1
        edges = self.closed_edges + ((x, v),)
        stubs = tuple(s for s in self.stubs if s != x)
        return PrefixGraph(self.word, v, edges, stubs)

    def to_matching(self) -> Matching:
        if not self.is_complete or self.stubs:
            raise ValueError("prefix is not a complete matching yet")
        return Matching(self.closed_edges)


def prefix(m: Matching, k: int) -> PrefixGraph:
    """The induced prefix of the first ``k`` vertices of ``m``."""
    if not 0 <= k <= m.n:
        raise ValueError(f"k must lie in 0..{m.n}, got {k}")
    closed = tuple(e for e in m.edges if e[1] <= k)
    stubs = tuple(a for a, b in m.edges if a <= k < b)
    return PrefixGraph(base(m), k, closed, stubs)


@dataclass(frozen=True)
class StubBlocks:
    """An ordered partition of a prefix's stubs into contiguous blocks."""

    relation: str  # "sim" | "approx"
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.relation not in ("sim", "approx"):
            raise ValueError(f"unknown stub relation {self.relation!r}")
        blocks = tuple(tuple(int(s) for s in b) for b in self.blocks)
        flat = [s for b in blocks for s in b]
        if any(not b for b in blocks):
            raise ValueError("blocks must be nonempty")
        if flat != sorted(set(flat)) or len(flat) != len(set(flat)):
            raise ValueError("blocks must partition the stubs in ascending order")
        object.__setattr__(self, "blocks", blocks)

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def stubs(self) -> tuple[int, ...]:
        return tuple(s for b in self.blocks for s in b)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.blocks)
