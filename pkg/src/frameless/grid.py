"""Finite windows of the lattice Z x Z."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class Grid:
    """A rectangular block of symbols anchored at a lattice point.

    ``cells[r, c]`` holds the symbol at lattice point
    ``(origin_row + r, origin_col + c)``. Rows grow downward, columns to
    the right.
    """

    cells: np.ndarray
    origin_row: int = 0
    origin_col: int = 0

    def __post_init__(self):
        cells = np.array(self.cells)
        if cells.size == 0:
            cells = cells.reshape(0, 0) if cells.ndim != 2 else cells
        if cells.ndim != 2:
            raise ValueError(f"grid cells must be 2-dimensional, got shape {cells.shape}")
        cells.setflags(write=False)
        object.__setattr__(self, "cells", cells)
        object.__setattr__(self, "origin_row", int(self.origin_row))
        object.__setattr__(self, "origin_col", int(self.origin_col))

    @classmethod
    def from_rows(cls, rows, origin_row=0, origin_col=0) -> Grid:
        """Build a grid from row strings ("0110") or nested sequences."""
        rows = list(rows)
        if rows and isinstance(rows[0], str):
            rows = [[int(ch) if ch.isdigit() else ch for ch in r] for r in rows]
        return cls(np.array(rows), origin_row, origin_col)

    @property
    def rows(self) -> int:
        return self.cells.shape[0]

    @property
    def cols(self) -> int:
        return self.cells.shape[1]

    @property
    def origin(self) -> tuple[int, int]:
        return self.origin_row, self.origin_col

    def contains(self, i: int, j: int) -> bool:
        return (self.origin_row <= i < self.origin_row + self.rows
                and self.origin_col <= j < self.origin_col + self.cols)

    def at(self, i: int, j: int):
        """Symbol at lattice point (i, j)."""
        if not self.contains(i, j):
            raise IndexError(f"({i}, {j}) lies outside the grid")
        v = self.cells[i - self.origin_row, j - self.origin_col]
        return v.item() if hasattr(v, "item") else v

    def row_strings(self) -> list[str]:
        return ["".join(str(v) for v in row.tolist()) for row in self.cells]

    def __eq__(self, other):
        if not isinstance(other, Grid):
            return NotImplemented
        return (self.origin == other.origin
                and self.cells.shape == other.cells.shape
                and bool(np.all(self.cells == other.cells)))

    def __hash__(self):
        return hash((self.origin, self.cells.shape, self.cells.tobytes()))

    def __repr__(self):
        return f"Grid({self.rows}x{self.cols} at {self.origin}, rows={self.row_strings()!r})"
