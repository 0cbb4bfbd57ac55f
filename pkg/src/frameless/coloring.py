"""Lattice colorings: additive f(i, j) = s(i + j) and the quadrant morphic plane."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from frameless.errors import DomainError, ResourceLimitError, UsageError
from frameless.grid import Grid
from frameless.tm_core import tm_bits_z

ADDITIVE_QUARTER = "additive-quarter"
ADDITIVE_PLANE = "additive-plane"
QUADRANT_MORPHIC = "quadrant-morphic"
KINDS = (ADDITIVE_QUARTER, ADDITIVE_PLANE, QUADRANT_MORPHIC)

DEFAULT_WINDOW_CAP = 1 << 13


@dataclass(frozen=True)
class ColoringSource:
    """Which coloring to read.

    ``word`` replaces Thue-Morse in the additive kinds with any map
    ``Z -> symbol``; it exists for negative controls and reduction tests.
    """

    kind: str = ADDITIVE_QUARTER
    word: Optional[Callable[[int], int]] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise UsageError(f"unknown coloring kind {self.kind!r}; expected one of {KINDS}")
        if self.word is not None and self.kind == QUADRANT_MORPHIC:
            raise UsageError("a custom word only applies to additive colorings")

    @property
    def additive(self) -> bool:
        return self.kind != QUADRANT_MORPHIC

    def check_domain(self, row_lo: int, col_lo: int):
        if self.kind == ADDITIVE_QUARTER and (row_lo < 0 or col_lo < 0):
            raise DomainError(
                f"the quarter-plane coloring is defined only for i, j >= 0 "
                f"(got row {row_lo}, col {col_lo})")

    def diagonal(self, lo: int, hi: int) -> np.ndarray:
        """s(lo) .. s(hi) for an additive source."""
        ks = np.arange(lo, hi + 1)
        if self.word is None:
            return tm_bits_z(ks)
        return np.array([self.word(int(k)) for k in ks])

    def __call__(self, i: int, j: int):
        return color_at(self, i, j)


ADDITIVE = ColoringSource(ADDITIVE_QUARTER)
PLANE = ColoringSource(ADDITIVE_PLANE)
QUADRANT = ColoringSource(QUADRANT_MORPHIC)


def color_at(src: ColoringSource, i: int, j: int):
    src.check_domain(i, j)
    if src.additive:
        return src.diagonal(i + j, i + j)[0].item()
    from frameless.morphism2d import quadrant_letters, TAU
    return TAU.map[int(quadrant_letters(np.array([i]), np.array([j]))[0])]


def window(src: ColoringSource, row_lo: int, row_hi: int, col_lo: int, col_hi: int,
           cap: int = DEFAULT_WINDOW_CAP) -> Grid:
    """The block of src with rows row_lo..row_hi and columns col_lo..col_hi."""
    if row_lo > row_hi or col_lo > col_hi:
        raise UsageError(f"empty window rows {row_lo}..{row_hi}, cols {col_lo}..{col_hi}")
    rows, cols = row_hi - row_lo + 1, col_hi - col_lo + 1
    if rows > cap or cols > cap:
        raise ResourceLimitError(f"window {rows}x{cols} exceeds the {cap} per-side cap")
    src.check_domain(row_lo, col_lo)
    if src.additive:
        diag = src.diagonal(row_lo + col_lo, row_hi + col_hi)
        offsets = np.arange(rows)[:, None] + np.arange(cols)[None, :]
        return Grid(diag[offsets], row_lo, col_lo)
    from frameless.morphism2d import quadrant_letters, TAU
    ii, jj = np.meshgrid(np.arange(row_lo, row_hi + 1), np.arange(col_lo, col_hi + 1), indexing="ij")
    letters = quadrant_letters(ii.ravel(), jj.ravel()).reshape(rows, cols)
    return Grid(TAU.table()[letters], row_lo, col_lo)


PBM_MAX_LINE = 70
PBM_WRAP_SYMBOLS = 32  # 63 characters per wrapped line


def render_pbm(g: Grid) -> bytes:
    """Plain (P1) PBM; 1 is black. Rows wider than 35 pixels are wrapped at 32 per line."""
    vals = np.unique(g.cells)
    if vals.size and not set(vals.tolist()) <= {0, 1}:
        raise UsageError(f"PBM needs a 0/1 grid, found symbols {sorted(map(str, vals.tolist()))}")
    lines = ["P1", f"{g.cols} {g.rows}"]
    for row in g.cells.tolist():
        text = " ".join(str(v) for v in row)
        if len(text) <= PBM_MAX_LINE:
            lines.append(text)
        else:
            for k in range(0, len(row), PBM_WRAP_SYMBOLS):
                lines.append(" ".join(str(v) for v in row[k:k + PBM_WRAP_SYMBOLS]))
    return ("\n".join(lines) + "\n").encode("ascii")


def parse_pbm(data: bytes, origin_row: int = 0, origin_col: int = 0) -> Grid:
    """Read a plain PBM back into a grid (comments allowed, raw P4 is not)."""
    tokens = []
    for line in data.decode("ascii").splitlines():
        tokens.extend(line.split("#", 1)[0].split())
    if not tokens or tokens[0] != "P1":
        raise ValueError("not a plain PBM (missing P1 magic)")
    cols, rows = int(tokens[1]), int(tokens[2])
    # PBM allows pixels without separating whitespace
    bits = [int(ch) for tok in tokens[3:] for ch in tok]
    if len(bits) != rows * cols:
        raise ValueError(f"expected {rows * cols} pixels, found {len(bits)}")
    return Grid(np.array(bits, dtype=np.uint8).reshape(rows, cols), origin_row, origin_col)


def render_text(g: Grid) -> str:
    return "\n".join(" ".join(str(v) for v in row) for row in g.cells.tolist())
