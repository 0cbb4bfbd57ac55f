"""Bounded checks of the overlap-free and frameless statements.

A pass only speaks for the scanned bounds, which every verdict carries.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Union

import numpy as np

from frameless.avoidance import FrameWitness, OverlapWitness, first_frame, first_overlap
from frameless.coloring import ColoringSource, window
from frameless.errors import UsageError
from frameless.tm_core import tm_bits_z

PASS = "pass"
FAIL = "fail"


@dataclass(frozen=True)
class BoundedVerdict:
    outcome: str
    witness: Optional[Union[OverlapWitness, FrameWitness]] = None
    bounds: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.outcome not in (PASS, FAIL):
            raise ValueError(f"bad outcome {self.outcome!r}")
        if (self.outcome == FAIL) != (self.witness is not None):
            raise ValueError("a failing verdict carries exactly one witness")

    @property
    def passed(self) -> bool:
        return self.outcome == PASS

    def to_dict(self) -> dict:
        return {
            "outcome": self.outcome,
            "witness": self.witness.to_dict() if self.witness else None,
            "bounds": dict(self.bounds),
        }


def _word_values(word: Optional[Callable[[int], int]], lo: int, hi: int) -> np.ndarray:
    ks = np.arange(lo, hi + 1)
    if word is None:
        return tm_bits_z(ks)
    return np.array([word(int(k)) for k in ks], dtype=np.int64)


def _overlap_scan(word, x_min: int, x_max: int, n_max: int) -> Optional[OverlapWitness]:
    values = _word_values(word, x_min, x_max + 2 * n_max)
    hit = first_overlap(values, x_max - x_min + 1, n_max)
    return OverlapWitness(hit[0] + x_min, hit[1]) if hit else None


def verify_overlap_free(i_max: int, n_max: int, word: Optional[Callable[[int], int]] = None) -> BoundedVerdict:
    """No overlap t(i..i+2n) with 0 <= i <= i_max and 1 <= n <= n_max.

    word defaults to Thue-Morse; pass another map for controls.
    """
    if i_max < 0 or n_max < 1:
        raise UsageError(f"need i_max >= 0 and n_max >= 1, got {i_max}, {n_max}")
    bounds = {"i": [0, i_max], "n": [1, n_max]}
    w = _overlap_scan(word, 0, i_max, n_max)
    return BoundedVerdict(FAIL, w, bounds) if w else BoundedVerdict(PASS, None, bounds)


def _interval(r) -> tuple[int, int]:
    lo, hi = (int(v) for v in r)
    if lo > hi:
        raise UsageError(f"empty interval {lo}..{hi}")
    return lo, hi


def verify_frameless(src: ColoringSource, m_range, n_range, p_max: int, q_max: int) -> BoundedVerdict:
    """Exhaustive frame scan: corner (m, n) in the given ranges, spans p <= p_max, q <= q_max.

    Frames may reach past the ranges by up to (p_max, q_max); those cells are
    read from the source too.
    """
    m_lo, m_hi = _interval(m_range)
    n_lo, n_hi = _interval(n_range)
    if p_max < 1 or q_max < 1:
        raise UsageError(f"need p_max, q_max >= 1, got {p_max}, {q_max}")
    bounds = {"m": [m_lo, m_hi], "n": [n_lo, n_hi], "p": [1, p_max], "q": [1, q_max]}
    g = window(src, m_lo, m_hi + p_max, n_lo, n_hi + q_max)
    cells = np.asarray(g.cells, dtype=np.int64)
    hit = first_frame(cells, m_hi - m_lo + 1, n_hi - n_lo + 1, p_max, q_max)
    if hit is None:
        return BoundedVerdict(PASS, None, bounds)
    m, n, p, q = hit
    return BoundedVerdict(FAIL, FrameWitness(m + m_lo, n + n_lo, p, q), bounds)


def verify_frameless_via_reduction(x_min: int, x_max: int, p_max: int,
                                   word: Optional[Callable[[int], int]] = None) -> BoundedVerdict:
    """Framelessness of g(i, j) = s(i + j) through overlaps of s.

    A frame with m + n = x and min(p, q) = r exists exactly when s has an
    overlap of period r starting at x, so scanning starts x_min..x_max and
    periods up to p_max covers every frame with m + n in that range and
    min(p, q) <= p_max. The witness is the overlap.
    """
    if x_min > x_max or p_max < 1:
        raise UsageError(f"bad bounds x={x_min}..{x_max}, p_max={p_max}")
    bounds = {"x": [x_min, x_max], "p": [1, p_max], "scanned": [x_min, x_max + 2 * p_max]}
    w = _overlap_scan(word, x_min, x_max, p_max)
    return BoundedVerdict(FAIL, w, bounds) if w else BoundedVerdict(PASS, None, bounds)
