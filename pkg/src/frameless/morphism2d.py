"""Uniform two-dimensional morphisms, the gamma/tau pair, and the four-quadrant plane."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from frameless.errors import ResourceLimitError, UnknownSymbolError, UsageError
from frameless.grid import Grid
from frameless.tm_core import complement, tm_bit, tm_bits_z

DEFAULT_SIDE_CAP = 1 << 13


@dataclass(frozen=True, eq=False)
class Morphism2D:
    """Letter -> block of letters, every block the same shape.

    Letters are the ints 0..alphabet_size-1 that have rules.
    """

    rules: Mapping[int, np.ndarray]
    name: str = field(default="")

    def __post_init__(self):
        rules = {int(a): np.array(img, dtype=np.int64) for a, img in dict(self.rules).items()}
        if not rules:
            raise ValueError("a morphism needs at least one rule")
        shapes = {img.shape for img in rules.values()}
        if len(shapes) != 1:
            raise ValueError(f"non-uniform morphism: block shapes {sorted(shapes)}")
        (shape,) = shapes
        if len(shape) != 2 or 0 in shape:
            raise ValueError(f"blocks must be nonempty matrices, got shape {shape}")
        for a, img in rules.items():
            for (r, c), b in np.ndenumerate(img):
                if int(b) not in rules:
                    raise UnknownSymbolError(int(b), (a, r, c))
            img.setflags(write=False)
        object.__setattr__(self, "rules", rules)

    @property
    def block_shape(self) -> tuple[int, int]:
        return next(iter(self.rules.values())).shape

    @property
    def alphabet(self) -> list[int]:
        return sorted(self.rules)

    def table(self) -> np.ndarray:
        """Images stacked by letter: table()[a] is the block for a (zeros for gaps)."""
        br, bc = self.block_shape
        out = np.zeros((max(self.rules) + 1, br, bc), dtype=np.int64)
        for a, img in self.rules.items():
            out[a] = img
        return out

    def image(self, a: int) -> Grid:
        return Grid(self.rules[a])

    def __eq__(self, other):
        if not isinstance(other, Morphism2D):
            return NotImplemented
        return (self.rules.keys() == other.rules.keys()
                and all(np.array_equal(self.rules[a], other.rules[a]) for a in self.rules))

    def __hash__(self):
        return hash(tuple((a, img.tobytes()) for a, img in sorted(self.rules.items())))

    @classmethod
    def identity(cls, alphabet) -> Morphism2D:
        return cls({a: [[a]] for a in alphabet}, name="id")


GAMMA = Morphism2D({
    0: [[0, 1], [1, 3]],
    1: [[3, 0], [0, 3]],
    2: [[0, 3], [3, 0]],
    3: [[3, 2], [2, 0]],
}, name="gamma")


def gamma() -> Morphism2D:
    return GAMMA


def _check_letters(m: Morphism2D, cells: np.ndarray):
    if cells.size == 0:
        return
    known = np.isin(cells, list(m.rules))
    if not known.all():
        r, c = map(int, np.argwhere(~known)[0])
        raise UnknownSymbolError(cells[r, c].item(), (r, c))


def apply_2d(m: Morphism2D, g: Grid) -> Grid:
    """Replace every cell by its block; the origin scales with the block shape."""
    br, bc = m.block_shape
    cells = np.asarray(g.cells)
    if cells.size == 0:
        return Grid(np.zeros((g.rows * br, g.cols * bc), dtype=np.int64),
                    g.origin_row * br, g.origin_col * bc)
    _check_letters(m, cells)
    blocks = m.table()[cells.astype(np.int64)]
    out = blocks.transpose(0, 2, 1, 3).reshape(g.rows * br, g.cols * bc)
    return Grid(out, g.origin_row * br, g.origin_col * bc)


def compose_2d(outer: Morphism2D, inner: Morphism2D) -> Morphism2D:
    """The morphism a -> outer(inner(a))."""
    rules = {a: apply_2d(outer, Grid(img)).cells for a, img in inner.rules.items()}
    name = f"{outer.name}.{inner.name}" if outer.name and inner.name else ""
    return Morphism2D(rules, name=name)


def iterate_2d(m: Morphism2D, seed: int, k: int, cap: int = DEFAULT_SIDE_CAP) -> Grid:
    if k < 0:
        raise UsageError(f"iteration count must be >= 0, got {k}")
    br, bc = m.block_shape
    if max(br ** k, bc ** k) > cap:
        raise ResourceLimitError(
            f"{k} iterations give a {br ** k}x{bc ** k} grid, over the {cap} per-side cap")
    g = Grid([[seed]])
    _check_letters(m, g.cells)
    for _ in range(k):
        g = apply_2d(m, g)
    return g


@dataclass(frozen=True)
class Coding:
    map: Mapping[int, int]

    def table(self) -> np.ndarray:
        out = np.zeros(max(self.map) + 1, dtype=np.uint8)
        for a, b in self.map.items():
            out[a] = b
        return out


TAU = Coding({0: 0, 1: 1, 2: 0, 3: 1})


def apply_coding(c: Coding, g: Grid) -> Grid:
    cells = np.asarray(g.cells)
    if cells.size:
        known = np.isin(cells, list(c.map))
        if not known.all():
            r, col = map(int, np.argwhere(~known)[0])
            raise UnknownSymbolError(cells[r, col].item(), (r, col))
        cells = c.table()[cells.astype(np.int64)]
    return Grid(cells, g.origin_row, g.origin_col)


class Corner(enum.Enum):
    UPPER_LEFT = (0, 0)
    UPPER_RIGHT = (0, -1)
    LOWER_LEFT = (-1, 0)
    LOWER_RIGHT = (-1, -1)


# Each letter must reappear in the corner of its image that faces the center
# of the quadrant construction.
QUADRANT_CORNERS = {
    0: (Corner.LOWER_RIGHT,),
    1: (Corner.UPPER_RIGHT, Corner.LOWER_LEFT),
    3: (Corner.UPPER_LEFT,),
}


@dataclass(frozen=True)
class CornerViolation:
    letter: int
    corner: Corner
    found: int


@dataclass(frozen=True)
class CornerReport:
    violations: tuple = ()

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.passed


def check_corners(m: Morphism2D, spec: Mapping[int, tuple] = QUADRANT_CORNERS) -> CornerReport:
    bad = []
    for letter, corners in spec.items():
        if letter not in m.rules:
            raise UnknownSymbolError(letter, "corner spec")
        img = m.rules[letter]
        for corner in corners:
            found = int(img[corner.value])
            if found != letter:
                bad.append(CornerViolation(letter, corner, found))
    return CornerReport(tuple(bad))


QUADRANT_SEED = np.array([[0, 1], [1, 3]])  # gamma(0), centered on the lattice origin


def quadrant_plane(k: int, cap: int = DEFAULT_SIDE_CAP) -> Grid:
    """gamma^(2k) applied to the centered seed; covers rows and columns -4^k .. 4^k - 1.

    Block (i, j) of the image lands on rows 4i..4i+3, so cells with negative
    index grow up and to the left while keeping their corner letter next to
    the center. The corner conditions on gamma^2 make each stage nest inside
    the next.
    """
    if k < 0:
        raise UsageError(f"k must be >= 0, got {k}")
    side = 2 * 4 ** k
    if side > cap:
        raise ResourceLimitError(f"quadrant plane side {side} exceeds the {cap} cap")
    square = compose_2d(GAMMA, GAMMA)
    g = Grid(QUADRANT_SEED, -1, -1)
    for _ in range(k):
        g = apply_2d(square, g)
    return g


def quadrant_letters(ii: np.ndarray, jj: np.ndarray) -> np.ndarray:
    """Letters of the quadrant plane at arbitrary lattice points, without materializing it.

    Each point is read off as a path of gamma-block digits from its
    quadrant's seed letter.
    """
    ii = np.asarray(ii, dtype=np.int64)
    jj = np.asarray(jj, dtype=np.int64)
    if ii.size == 0:
        return np.zeros(ii.shape, dtype=np.int64)
    reach = int(max(ii.max() + 1, -ii.min(), jj.max() + 1, -jj.min(), 1))
    k = 0
    while 4 ** k < reach:
        k += 1
    half = 4 ** k
    letters = QUADRANT_SEED[(ii >= 0).astype(int), (jj >= 0).astype(int)]
    rows = np.where(ii >= 0, ii, ii + half)
    cols = np.where(jj >= 0, jj, jj + half)
    table = GAMMA.table()
    for level in range(2 * k - 1, -1, -1):
        letters = table[letters, (rows >> level) & 1, (cols >> level) & 1]
    return letters


@dataclass(frozen=True)
class RecurrenceReport:
    checked: int
    counterexamples: tuple = ()

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def __bool__(self):
        return self.passed


def recurrence_cells(m: int, n: int) -> dict:
    """Predicted f(2m+a, 2n+b) from t(x), t(x+1) with x = m + n."""
    x = m + n
    tx = tm_bit(x)
    return {
        (2 * m, 2 * n): tx,
        (2 * m + 1, 2 * n): complement(tx),
        (2 * m, 2 * n + 1): complement(tx),
        (2 * m + 1, 2 * n + 1): tm_bit(x + 1),
    }


def recurrence_check(m_max: int, trials: int, seed: int = 0) -> RecurrenceReport:
    """Sample (m, n) with m + n <= m_max and test the doubling recurrence on f(i, j) = t(i + j)."""
    if m_max < 1 or trials < 1:
        raise UsageError("m_max and trials must be positive")
    rng = np.random.default_rng(seed)
    xs = rng.integers(0, m_max + 1, size=trials)
    ms = rng.integers(0, xs + 1)
    ns = xs - ms
    bad = []
    for m, n in zip(ms.tolist(), ns.tolist()):
        predicted = recurrence_cells(m, n)
        cells = np.array(list(predicted))
        actual = tm_bits_z(cells[:, 0] + cells[:, 1])
        if actual.tolist() != list(predicted.values()):
            bad.append((m, n))
    return RecurrenceReport(trials, tuple(bad))
