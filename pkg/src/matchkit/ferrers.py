"""Matchings as transversals of Ferrers shapes.

Number the r-vertices of a base word 1..m left to right; row i of the
shape (counted from the bottom) has one cell per l-vertex lying left of
the i-th r-vertex.  A matching with that base marks cell (i, j) when its
j-th l-vertex is joined to its i-th r-vertex; every row and every column
is used exactly once, so the marks form a transversal.

Rows are stored bottom-up.  The ascii serialization prints top-down and
says so in a header line.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .core import DyckWord, Matching, as_word, base

__all__ = [
    "FerrersShape",
    "Transversal",
    "shape_from_base",
    "base_word_for_shape",
    "matching_to_transversal",
    "transversal_to_matching",
]

SCHEMA_VERSION = "1"


@dataclass(frozen=True)
class FerrersShape:
    """Row lengths, bottom-up and weakly increasing, inside an m x m box."""

    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        rows = tuple(int(r) for r in self.rows)
        m = len(rows)
        for i, r in enumerate(rows):
            if r < 0 or r > m:
                raise ValueError(f"row length {r} outside 0..{m}")
            if i > 0 and r < rows[i - 1]:
                raise ValueError("row lengths must weakly increase bottom-up")
        object.__setattr__(self, "rows", rows)

    @property
    def size(self) -> int:
        return len(self.rows)

    def rows_top_down(self) -> tuple[int, ...]:
        return tuple(reversed(self.rows))

    def ascii_art(self, cells: tuple[tuple[int, int], ...] = ()) -> str:
        marked = set(cells)
        lines = ["# rows printed top to bottom; row 1 is the bottom row"]
        for i in range(self.size, 0, -1):
            row = self.rows[i - 1]
            lines.append(" ".join("X" if (i, j) in marked else "." for j in range(1, row + 1)))
        return "\n".join(lines)


@dataclass(frozen=True)
class Transversal:
    """One marked cell per row and per column, all inside the shape."""

    shape: FerrersShape
    cells: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        m = self.shape.size
        cells = tuple(sorted((int(i), int(j)) for i, j in self.cells))
        if [i for i, _ in cells] != list(range(1, m + 1)):
            raise ValueError(f"need exactly one cell in each of rows 1..{m}")
        if sorted(j for _, j in cells) != list(range(1, m + 1)):
            raise ValueError(f"need exactly one cell in each of columns 1..{m}")
        for i, j in cells:
            if j > self.shape.rows[i - 1]:
                raise ValueError(f"cell ({i},{j}) lies outside row {i}")
        object.__setattr__(self, "cells", cells)

    def ascii_art(self) -> str:
        return self.shape.ascii_art(self.cells)

    def json_obj(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "ferrers_transversal",
            "note": "rows are indexed from the bottom",
            "rows_bottom_up": list(self.shape.rows),
            "rows_top_down": list(self.shape.rows_top_down()),
            "cells": [{"row": i, "col": j} for i, j in self.cells],
        }


def shape_from_base(w: Union[DyckWord, str]) -> FerrersShape:
    """Row i counts the l-vertices before the i-th r-vertex."""
    word = as_word(w)
    rows = []
    zeros = 0
    for c in word.bits:
        if c == "0":
            zeros += 1
        else:
            rows.append(zeros)
    return FerrersShape(tuple(rows))


def base_word_for_shape(shape: FerrersShape) -> DyckWord:
    """The unique base word whose shape this is; not every shape has one."""
    m = shape.size
    for i, r in enumerate(shape.rows, start=1):
        if r < i:
            raise ValueError(
                f"row {i} has only {r} cells; no base word realizes this shape"
            )
    ones = {r + i for i, r in enumerate(shape.rows, start=1)}
    return DyckWord("".join("1" if p in ones else "0" for p in range(1, 2 * m + 1)))


def matching_to_transversal(m: Matching) -> Transversal:
    """Mark cell (i, j) when the j-th l-vertex pairs with the i-th r-vertex."""
    w = base(m)
    shape = shape_from_base(w)
    col = {x: j for j, x in enumerate(m.l_vertices, start=1)}
    row = {y: i for i, y in enumerate(m.r_vertices, start=1)}
    cells = tuple((row[b], col[a]) for a, b in m.edges)
    return Transversal(shape, cells)


def transversal_to_matching(t: Transversal) -> Matching:
    """Rebuild the matching from its transversal (inverse of the above)."""
    w = base_word_for_shape(t.shape)
    xs = w.l_positions
    ys = w.r_positions
    return Matching(tuple((xs[j - 1], ys[i - 1]) for i, j in t.cells))
