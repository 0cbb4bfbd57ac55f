"""Exhaustive search for overlaps in words and picture frames in grids.

Both searches report the lexicographically smallest witness: overlaps are
ordered by (start, period), frames by (m, n, p, q).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Union

import numpy as np

from frameless.errors import UsageError
from frameless.grid import Grid


@dataclass(frozen=True, order=True)
class OverlapWitness:
    """An overlap axaxa starting at i with period n = |ax|."""

    i: int
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise UsageError(f"overlap period must be >= 1, got {self.n}")

    def holds(self, word: Union[Sequence, Callable[[int], object]]) -> bool:
        """Re-check the witness against a finite word or a map from Z."""
        if callable(word):
            get = word
        else:
            if self.i < 0 or self.i + 2 * self.n >= len(word):
                return False
            get = word.__getitem__
        return all(get(self.i + j) == get(self.i + self.n + j) for j in range(self.n + 1))

    def to_dict(self) -> dict:
        return {"kind": "overlap", "i": self.i, "n": self.n}


@dataclass(frozen=True, order=True)
class FrameWitness:
    """A frame with top-left corner (m, n), spanning rows m..m+p and columns n..n+q."""

    m: int
    n: int
    p: int
    q: int

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise UsageError(f"frame needs p, q >= 1, got p={self.p}, q={self.q}")

    def holds(self, coloring: Union[Grid, Callable[[int, int], object]]) -> bool:
        get = coloring.at if isinstance(coloring, Grid) else coloring
        m, n, p, q = self.m, self.n, self.p, self.q
        if isinstance(coloring, Grid):
            if not (coloring.contains(m, n) and coloring.contains(m + p, n + q)):
                return False
        rows_ok = all(get(m, n + k) == get(m + p, n + k) for k in range(q + 1))
        return rows_ok and all(get(m + k, n) == get(m + k, n + q) for k in range(p + 1))

    def to_dict(self) -> dict:
        return {"kind": "frame", "m": self.m, "n": self.n, "p": self.p, "q": self.q}


def _codes(seq) -> np.ndarray:
    """Map arbitrary hashable symbols to small ints, preserving equality."""
    if isinstance(seq, np.ndarray) and seq.dtype.kind in "iub":
        return seq.astype(np.int64)
    table: dict = {}
    return np.array([table.setdefault(s, len(table)) for s in seq], dtype=np.int64)


def first_overlap(arr: np.ndarray, i_count: int, n_max: int) -> Optional[tuple[int, int]]:
    """Smallest (i, n) with i < i_count, 1 <= n <= n_max and arr[i+j] == arr[i+n+j] for j <= n.

    Only overlaps lying entirely inside arr are considered.
    """
    length = len(arr)
    best = None
    n_max = min(n_max, (length - 1) // 2)
    for n in range(1, n_max + 1):
        starts = min(i_count, length - 2 * n)
        if best is not None:
            starts = min(starts, best[0])
        if starts <= 0:
            continue
        eq = arr[:-n] == arr[n:]
        misses = np.concatenate(([0], np.cumsum(~eq)))
        window_misses = misses[n + 1:n + 1 + starts] - misses[:starts]
        hits = np.flatnonzero(window_misses == 0)
        if hits.size:
            best = (int(hits[0]), n)
    return best


def find_overlap(w: Sequence) -> Optional[OverlapWitness]:
    hit = first_overlap(_codes(w), len(w), len(w))
    return OverlapWitness(*hit) if hit else None


def is_overlap_free(w: Sequence) -> bool:
    return find_overlap(w) is None


def _runs_from(eq: np.ndarray) -> np.ndarray:
    """For a boolean array, length of the all-True run starting at each index of the last axis."""
    run = np.zeros(eq.shape, dtype=np.int32)
    nxt = np.zeros(eq.shape[:-1], dtype=np.int32)
    for c in range(eq.shape[-1] - 1, -1, -1):
        nxt = (nxt + 1) * eq[..., c]
        run[..., c] = nxt
    return run


def _pair_runs(codes: np.ndarray, span_max: int) -> np.ndarray:
    """runs[s-1, r, c]: how many columns from c on rows r and r+s agree (0 if r+s is off-grid)."""
    rows, cols = codes.shape
    eq = np.zeros((span_max, rows, cols), dtype=bool)
    for s in range(1, span_max + 1):
        if s < rows:
            eq[s - 1, :rows - s] = codes[:rows - s] == codes[s:]
    return _runs_from(eq)


def first_frame(codes: np.ndarray, m_count: int, n_count: int,
                p_max: int, q_max: int) -> Optional[tuple[int, int, int, int]]:
    """Smallest frame (m, n, p, q) in local coordinates with m < m_count, n < n_count.

    A frame needs rows m, m+p to agree on columns n..n+q and columns n, n+q
    to agree on rows m..m+p. Equality run lengths turn each of those into a
    single comparison, so every (m, n, q) for a given p is tested at once.
    """
    rows, cols = codes.shape
    m_count, n_count = min(m_count, rows), min(n_count, cols)
    p_max, q_max = min(p_max, rows - 1), min(q_max, cols - 1)
    if m_count <= 0 or n_count <= 0 or p_max < 1 or q_max < 1:
        return None
    row_runs = _pair_runs(codes, p_max)[:, :m_count, :n_count]
    col_runs = _pair_runs(codes.T, q_max)[:, :n_count, :m_count].transpose(2, 1, 0)
    need_cols = np.arange(2, q_max + 2, dtype=np.int32)
    best = None
    for p in range(1, p_max + 1):
        rows_ok = row_runs[p - 1][:, :, None] >= need_cols
        hit = rows_ok & (col_runs >= p + 1)
        if best is not None:
            hit = hit[:best[0] + 1]
        flat = np.flatnonzero(hit)
        if flat.size:
            m, n, qi = np.unravel_index(flat[0], hit.shape)
            cand = (int(m), int(n), p, int(qi) + 1)
            if best is None or cand < best:
                best = cand
    return best


def find_frame(g: Grid) -> Optional[FrameWitness]:
    if g.rows < 2 or g.cols < 2:
        return None
    codes = _codes(g.cells.ravel()).reshape(g.cells.shape)
    hit = first_frame(codes, g.rows, g.cols, g.rows - 1, g.cols - 1)
    if hit is None:
        return None
    m, n, p, q = hit
    return FrameWitness(m + g.origin_row, n + g.origin_col, p, q)


def reduce_frame_to_overlap(fw: FrameWitness) -> OverlapWitness:
    """Overlap forced by a frame in an additive coloring g(i, j) = s(i + j).

    Rows m and m+p agreeing give s(x+k) = s(x+p+k) for k <= q, columns give
    s(x+k) = s(x+q+k) for k <= p, with x = m + n. The smaller span is a
    period over 2*min(p, q) + 1 symbols starting at x.
    """
    return OverlapWitness(fw.m + fw.n, min(fw.p, fw.q))


def witness_from_dict(d: dict) -> Union[OverlapWitness, FrameWitness]:
    """Inverse of ``to_dict`` on either witness type (extra keys are ignored)."""
    if d.get("kind") == "overlap":
        return OverlapWitness(int(d["i"]), int(d["n"]))
    if d.get("kind") == "frame":
        return FrameWitness(int(d["m"]), int(d["n"]), int(d["p"]), int(d["q"]))
    raise ValueError(f"unknown witness kind {d.get('kind')!r}")
