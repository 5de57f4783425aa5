"""Exhaustive enumeration and counting of pattern-avoiding matchings.

The counting kernel is deliberately naive: stream every matching with a
given base and test each one against the pattern sets.  All the clever
structures elsewhere in the package are validated against these counts,
so this module stays the simple, trusted route.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Mapping, Union

from .core import (
    DyckWord,
    Matching,
    as_word,
    contains,
    expand_patterns,
    pattern_label,
    permutational,
)
from .limits import check_size, enumeration_limit

__all__ = [
    "catalan",
    "a005700",
    "enumerate_bases",
    "enumerate_matchings",
    "enumerate_matchings_of_size",
    "CountTable",
    "count_table",
    "count_avoiders",
    "RelationVerdict",
    "classify_relation",
    "SINGLE_PATTERNS",
]

SCHEMA_VERSION = "1"


def catalan(m: int) -> int:
    if m < 0:
        raise ValueError("catalan is defined for m >= 0")
    return math.comb(2 * m, m) // (m + 1)


def a005700(m: int) -> int:
    """c(m+2)c(m) - c(m+1)^2: pairs of Dyck paths of length 2m, one below the other."""
    if m < 0:
        raise ValueError("a005700 is defined for m >= 0")
    return catalan(m + 2) * catalan(m) - catalan(m + 1) ** 2


def enumerate_bases(m: int) -> Iterator[DyckWord]:
    """All Dyck words of size m in lexicographic order (0 sorts before 1)."""
    if m < 0:
        raise ValueError("size must be nonnegative")
    n = 2 * m
    bits: list[str] = []

    def rec(zeros: int, h: int) -> Iterator[DyckWord]:
        if len(bits) == n:
            yield DyckWord("".join(bits))
            return
        if zeros < m:
            bits.append("0")
            yield from rec(zeros + 1, h + 1)
            bits.pop()
        if h > 0:
            bits.append("1")
            yield from rec(zeros, h - 1)
            bits.pop()

    return rec(0, 0)


def enumerate_matchings(w: Union[DyckWord, str]) -> Iterator[Matching]:
    """All matchings whose base is ``w``.

    At every r-position each open stub may be closed, so the stream has
    exactly prod(height before each 1) members; duplicates cannot occur.
    """
    word = as_word(w)
    bits = word.bits
    n = len(bits)
    edges: list[tuple[int, int]] = []
    stubs: list[int] = []

    def rec(pos: int) -> Iterator[Matching]:
        if pos > n:
            yield Matching(tuple(edges))
            return
        if bits[pos - 1] == "0":
            stubs.append(pos)
            yield from rec(pos + 1)
            stubs.pop()
        else:
            for i in range(len(stubs)):  # ascending stub order keeps output stable
                x = stubs.pop(i)
                edges.append((x, pos))
                yield from rec(pos + 1)
                edges.pop()
                stubs.insert(i, x)

    return rec(1)


def enumerate_matchings_of_size(m: int) -> Iterator[Matching]:
    """All (2m-1)!! matchings of size m, grouped by base in lexicographic order."""
    for w in enumerate_bases(m):
        yield from enumerate_matchings(w)


@dataclass(frozen=True)
class CountTable:
    """Avoider counts per base word, possibly for several pattern sets at once."""

    m: int
    entries: tuple[tuple[str, str, int], ...]  # (base word, pattern-set label, count)

    def labels(self) -> tuple[str, ...]:
        out: list[str] = []
        for _, label, _ in self.entries:
            if label not in out:
                out.append(label)
        return tuple(out)

    def per_base(self, label: str | None = None) -> dict[str, int]:
        label = self._only(label)
        return {w: c for w, lab, c in self.entries if lab == label}

    def count(self, w: Union[DyckWord, str], label: str | None = None) -> int:
        label = self._only(label)
        bits = as_word(w).bits
        for word, lab, c in self.entries:
            if word == bits and lab == label:
                return c
        raise KeyError(f"no entry for w={bits!r}, pattern_set={label!r}")

    def marginal(self, label: str | None = None) -> int:
        return sum(self.per_base(label).values())

    def _only(self, label: str | None) -> str:
        labels = self.labels()
        if label is None:
            if len(labels) != 1:
                raise ValueError(f"table holds {labels}, pick one")
            return labels[0]
        if label not in labels:
            raise KeyError(f"no pattern set {label!r} in table")
        return label

    def csv_text(self) -> str:
        lines = ["m,w,pattern_set,count"]
        lines.extend(f"{self.m},{w},{lab},{c}" for w, lab, c in self.entries)
        return "\n".join(lines) + "\n"

    def json_obj(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "count_table",
            "m": self.m,
            "entries": [
                {"w": w, "pattern_set": lab, "count": c} for w, lab, c in self.entries
            ],
            "totals": {lab: self.marginal(lab) for lab in self.labels()},
        }


def count_table(m: int, pattern_sets: Mapping[str, object]) -> CountTable:
    """Count avoiders for every base of size m in one enumeration sweep."""
    check_size(m, enumeration_limit(), "enumeration")
    expanded = {lab: expand_patterns(ps, m) for lab, ps in pattern_sets.items()}
    entries: list[tuple[str, str, int]] = []
    for w in enumerate_bases(m):
        counts = {lab: 0 for lab in expanded}
        for match in enumerate_matchings(w):
            for lab, pats in expanded.items():
                if not any(contains(match, p) for p in pats):
                    counts[lab] += 1
        entries.extend((w.bits, lab, counts[lab]) for lab in expanded)
    return CountTable(m, tuple(entries))


def count_avoiders(
    m: int,
    patterns,
    base: Union[DyckWord, str, None] = None,
) -> Union[int, CountTable]:
    """g(m, w, patterns) for one base, or the whole per-base table when w is None."""
    check_size(m, enumeration_limit(), "enumeration")
    if base is not None:
        word = as_word(base)
        if word.size != m:
            raise ValueError(f"base {word} has size {word.size}, expected {m}")
        pats = expand_patterns(patterns, m)
        return sum(
            1
            for match in enumerate_matchings(word)
            if not any(contains(match, p) for p in pats)
        )
    return count_table(m, {pattern_label(patterns): patterns})


@dataclass(frozen=True)
class RelationVerdict:
    """Cell-by-cell comparison of two pattern sets' avoider counts.

    The verdict only speaks about sizes up to ``max_size``; nothing here
    claims anything beyond the examined range.
    """

    label_a: str
    label_b: str
    max_size: int
    cells: tuple[tuple[int, str, int, int], ...]  # (m, w, count_a, count_b)
    tag: str  # equal-everywhere | A-strictly-below | B-strictly-below | incomparable
    witness_a_below: tuple[int, str] | None
    witness_b_below: tuple[int, str] | None

    def json_obj(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "relation_verdict",
            "a": self.label_a,
            "b": self.label_b,
            "max_size": self.max_size,
            "tag": self.tag,
            "witness_a_below": list(self.witness_a_below) if self.witness_a_below else None,
            "witness_b_below": list(self.witness_b_below) if self.witness_b_below else None,
            "cells": [
                {"m": m, "w": w, "count_a": a, "count_b": b}
                for m, w, a, b in self.cells
            ],
        }


def classify_relation(a, b, max_size: int) -> RelationVerdict:
    """Compare avoider counts of two pattern sets for every base up to max_size."""
    check_size(max_size, enumeration_limit(), "relation classification")
    label_a, label_b = pattern_label(a), pattern_label(b)
    if label_a == label_b:
        label_a, label_b = f"A:{label_a}", f"B:{label_b}"
    cells: list[tuple[int, str, int, int]] = []
    wit_a: tuple[int, str] | None = None
    wit_b: tuple[int, str] | None = None
    for m in range(1, max_size + 1):
        table = count_table(m, {label_a: a, label_b: b})
        per_a = table.per_base(label_a)
        per_b = table.per_base(label_b)
        for w in sorted(per_a):
            ca, cb = per_a[w], per_b[w]
            cells.append((m, w, ca, cb))
            if ca < cb and wit_a is None:
                wit_a = (m, w)
            if cb < ca and wit_b is None:
                wit_b = (m, w)
    if wit_a and wit_b:
        tag = "incomparable"
    elif wit_a:
        tag = "A-strictly-below"
    elif wit_b:
        tag = "B-strictly-below"
    else:
        tag = "equal-everywhere"
    return RelationVerdict(label_a, label_b, max_size, tuple(cells), tag, wit_a, wit_b)


#: The six single three-edge patterns in their usual one-line naming.
SINGLE_PATTERNS: dict[str, Matching] = {
    name: permutational(name) for name in ("123", "132", "213", "231", "312", "321")
}
