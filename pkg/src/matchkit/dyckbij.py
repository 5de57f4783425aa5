"""The bijection between 231-avoiding matchings and dominated path pairs.

A matching with base W avoids the pattern 231 (edges {1,5},{2,6},{3,4})
exactly when it can be rebuilt from a second Dyck word P that never
rises above W: pair the i-th up-step of P with the down-step that closes
its tunnel, and connect the i-th l-vertex of W to the j-th r-vertex of W
whenever up-step i partners down-step j.

The inverse splits a matching at the edge of vertex 1: edges ending
before that edge's r-vertex are short, the rest are long, and
``P = 0 . P_short . 1 . P_long`` recursively.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

from .core import (
    DyckWord,
    Edge,
    Matching,
    as_word,
    base,
    contains,
    induced_matching,
    permutational,
)
from .limits import check_size, enumeration_limit

__all__ = [
    "TunnelTable",
    "tunnels",
    "dominates",
    "NoncrossingPair",
    "matching_from_pair",
    "ShortLongSplit",
    "split_short_long",
    "avoids231_by_split",
    "path_from_matching",
    "enumerate_noncrossing",
    "count_noncrossing",
]

_M231 = permutational("231")


@dataclass(frozen=True)
class TunnelTable:
    """Which down-step closes the tunnel opened by each up-step."""

    word: DyckWord
    down_for_up: tuple[int, ...]  # entry i-1: the down-step index paired with up-step i

    def __post_init__(self) -> None:
        m = self.word.size
        if sorted(self.down_for_up) != list(range(1, m + 1)):
            raise ValueError("tunnel partners must form a bijection of 1..m")

    @property
    def up_for_down(self) -> tuple[int, ...]:
        inv = [0] * len(self.down_for_up)
        for i, j in enumerate(self.down_for_up, start=1):
            inv[j - 1] = i
        return tuple(inv)

    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((i, j) for i, j in enumerate(self.down_for_up, start=1))


def tunnels(p: Union[DyckWord, str]) -> TunnelTable:
    """Pair every up-step with the down-step returning to its start height."""
    word = as_word(p)
    partners = [0] * word.size
    stack: list[int] = []
    ups = downs = 0
    for c in word.bits:
        if c == "0":
            ups += 1
            stack.append(ups)
        else:
            downs += 1
            partners[stack.pop() - 1] = downs
    return TunnelTable(word, tuple(partners))


def dominates(upper: Union[DyckWord, str], lower: Union[DyckWord, str]) -> bool:
    """True when the lower path never rises above the upper one."""
    up, lo = as_word(upper), as_word(lower)
    if len(up) != len(lo):
        raise ValueError("words must have equal length")
    return all(a >= b for a, b in zip(up.heights(), lo.heights()))


@dataclass(frozen=True)
class NoncrossingPair:
    """A pair of equal-length Dyck words with the lower one dominated."""

    upper: DyckWord
    lower: DyckWord

    def __post_init__(self) -> None:
        if not dominates(self.upper, self.lower):
            raise ValueError("lower path rises above the upper path")

    def matching(self) -> Matching:
        return matching_from_pair(self.upper, self.lower)


def matching_from_pair(upper: Union[DyckWord, str], lower: Union[DyckWord, str]) -> Matching:
    """Build the matching encoded by a dominated pair (edge {x_i, y_j} per tunnel)."""
    up, lo = as_word(upper), as_word(lower)
    if not dominates(up, lo):
        raise ValueError("lower path rises above the upper path")
    xs = up.l_positions
    ys = up.r_positions
    edges = []
    for i, j in tunnels(lo).pairs():
        x, y = xs[i - 1], ys[j - 1]
        # domination makes every tunnel end after its start's l-vertex
        assert x < y, f"tunnel ({i},{j}) of {lo} maps to a backwards edge under {up}"
        edges.append((x, y))
    return Matching(tuple(edges))


@dataclass(frozen=True)
class ShortLongSplit:
    """The split of a matching at the edge of vertex 1."""

    pivot: Edge
    pivot_index: int  # the pivot's r-vertex is the k-th r-vertex overall
    short_edges: tuple[Edge, ...]  # r-vertex before the pivot's
    long_edges: tuple[Edge, ...]  # r-vertex after the pivot's
    short_before_long: bool  # every short l-vertex precedes every long l-vertex


def split_short_long(m: Matching) -> ShortLongSplit:
    if m.size == 0:
        raise ValueError("the empty matching has no pivot edge")
    yk = m.partner(1)
    k = m.r_vertices.index(yk) + 1
    short = tuple(e for e in m.edges if e != (1, yk) and e[1] < yk)
    long = tuple(e for e in m.edges if e[1] > yk)
    before = (not short or not long) or max(a for a, _ in short) < min(
        a for a, _ in long
    )
    return ShortLongSplit((1, yk), k, short, long, before)


def avoids231_by_split(m: Matching) -> bool:
    """Recursive 231-avoidance test, no pattern search involved.

    A matching avoids 231 iff both halves of its split do and all short
    l-vertices come before all long l-vertices.
    """
    if m.size <= 2:
        return True
    s = split_short_long(m)
    if not s.short_before_long:
        return False
    return avoids231_by_split(induced_matching(s.short_edges)) and avoids231_by_split(
        induced_matching(s.long_edges)
    )


def path_from_matching(m: Matching) -> DyckWord:
    """The lower path P with matching_from_pair(base(m), P) == m.

    Only defined for 231-avoiders; anything else raises.
    """
    if contains(m, _M231):
        raise ValueError("matching does not avoid the 231 pattern")
    word = _assemble(m)
    assert dominates(base(m), word)
    return word


def _assemble(m: Matching) -> DyckWord:
    if m.size == 0:
        return DyckWord("")
    s = split_short_long(m)
    short = induced_matching(s.short_edges)
    long = induced_matching(s.long_edges)
    # the reassembled bases must stay below the original base
    wx = "0" + base(short).bits + "1" + base(long).bits
    assert dominates(base(m), wx), f"split of {m} escapes its base"
    return DyckWord("0" + _assemble(short).bits + "1" + _assemble(long).bits)


def enumerate_noncrossing(w: Union[DyckWord, str]) -> Iterator[DyckWord]:
    """All Dyck words dominated by ``w``, in lexicographic order."""
    word = as_word(w)
    check_size(word.size, enumeration_limit(), "dominated-path enumeration")
    caps = word.heights()
    n = len(word)
    bits: list[str] = []

    def rec(h: int) -> Iterator[DyckWord]:
        pos = len(bits)
        if pos == n:
            yield DyckWord("".join(bits))
            return
        if h + 1 <= caps[pos + 1]:
            bits.append("0")
            yield from rec(h + 1)
            bits.pop()
        if h > 0:
            bits.append("1")
            yield from rec(h - 1)
            bits.pop()

    return rec(0)


def count_noncrossing(w: Union[DyckWord, str]) -> int:
    """How many Dyck words are dominated by ``w`` (height-capped lattice DP)."""
    word = as_word(w)
    check_size(word.size, enumeration_limit(), "dominated-path counting")
    caps = word.heights()
    m = word.size
    ways = [0] * (m + 2)
    ways[0] = 1
    for pos in range(1, 2 * m + 1):
        nxt = [0] * (m + 2)
        cap = caps[pos]
        for h in range(0, m + 1):
            if not ways[h]:
                continue
            if h + 1 <= cap:
                nxt[h + 1] += ways[h]
            if h >= 1:
                nxt[h - 1] += ways[h]
        ways = nxt
    return ways[0]
