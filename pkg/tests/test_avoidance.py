import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from frameless.avoidance import (
    FrameWitness,
    OverlapWitness,
    find_frame,
    find_overlap,
    is_overlap_free,
    reduce_frame_to_overlap,
    witness_from_dict,
)
from frameless.errors import UsageError
from frameless.grid import Grid
from frameless.tm_core import tm_prefix
from oracles import naive_frame, naive_overlap

ERMINE = ["ERMINE", "WABCDW", "ERMINE"]


def test_overlap_examples():
    assert find_overlap("alfalfa") == OverlapWitness(0, 3)
    assert find_overlap("000") == OverlapWitness(0, 1)
    assert find_overlap(tm_prefix(16)) is None
    assert find_overlap("") is None and find_overlap("ab") is None


def test_is_overlap_free():
    assert is_overlap_free("0110")
    assert not is_overlap_free("aa" + "a")
    assert not is_overlap_free([7, 7, 7])
    assert is_overlap_free(tm_prefix(64))


def test_two_letters_are_not_an_overlap():
    # "aa" is a square, not an overlap: axaxa needs at least 3 symbols
    assert is_overlap_free("aa")
    assert naive_overlap("aa") is None


@pytest.mark.parametrize("length", range(0, 13))
def test_overlap_matches_naive_oracle_exhaustively(length):
    for bits in itertools.product((0, 1), repeat=length):
        assert find_overlap(bits) == (OverlapWitness(*naive_overlap(bits)) if naive_overlap(bits) else None)


@given(st.text(alphabet="abc", max_size=40))
def test_overlap_witness_is_sound(w):
    hit = find_overlap(w)
    if hit is not None:
        assert hit.holds(w)
        seg = w[hit.i:hit.i + 2 * hit.n + 1]
        a, x = seg[0], seg[1:hit.n]
        assert seg == a + x + a + x + a
    else:
        assert naive_overlap(w) is None


def test_tm_prefix_of_64_has_no_overlap_by_brute_force():
    assert naive_overlap(tm_prefix(64)) is None


@pytest.mark.parametrize("length", range(3, 11))
def test_every_binary_word_of_length_3_has_axa(length):
    for bits in itertools.product((0, 1), repeat=length):
        assert any(bits[i] == bits[j] for i in range(length) for j in range(i + 1, length))


def test_frame_examples():
    assert find_frame(Grid(np.zeros((2, 2), int))) == FrameWitness(0, 0, 1, 1)
    assert find_frame(Grid.from_rows(ERMINE)) == FrameWitness(0, 0, 2, 5)
    assert find_frame(Grid([[0, 1], [1, 0]])) is None


def test_frame_reports_lattice_coordinates():
    g = Grid.from_rows(ERMINE, origin_row=-7, origin_col=4)
    w = find_frame(g)
    assert w == FrameWitness(-7, 4, 2, 5)
    assert w.holds(g)


def test_degenerate_grids_have_no_frames():
    assert find_frame(Grid([[1, 1, 1, 1]])) is None
    assert find_frame(Grid([[1], [1], [1]])) is None
    assert find_frame(Grid(np.zeros((0, 0)))) is None


def test_frame_matches_naive_on_all_binary_grids_up_to_3x3():
    for rows, cols in itertools.product(range(1, 4), repeat=2):
        for bits in itertools.product((0, 1), repeat=rows * cols):
            cells = [list(bits[r * cols:(r + 1) * cols]) for r in range(rows)]
            expected = naive_frame(cells)
            assert find_frame(Grid(cells)) == (FrameWitness(*expected) if expected else None)


@pytest.mark.parametrize("alphabet", [2, 3])
def test_frame_matches_naive_on_random_6x6(alphabet):
    rng = random.Random(alphabet)
    for _ in range(200):
        cells = [[rng.randrange(alphabet) for _ in range(6)] for _ in range(6)]
        expected = naive_frame(cells)
        got = find_frame(Grid(cells))
        assert got == (FrameWitness(*expected) if expected else None)
        if got:
            assert got.holds(Grid(cells))


@settings(max_examples=60)
@given(st.integers(1, 9), st.integers(1, 9), st.integers(2, 4), st.integers(0, 2 ** 32 - 1))
def test_frame_matches_naive_on_random_rectangles(rows, cols, k, seed):
    rng = random.Random(seed)
    cells = [[rng.randrange(k) for _ in range(cols)] for _ in range(rows)]
    expected = naive_frame(cells, origin=(3, -2))
    got = find_frame(Grid(cells, 3, -2))
    assert got == (FrameWitness(*expected) if expected else None)


def test_witness_types_validate():
    with pytest.raises(UsageError):
        FrameWitness(0, 0, 0, 1)
    with pytest.raises(UsageError):
        FrameWitness(0, 0, 2, 0)
    with pytest.raises(UsageError):
        OverlapWitness(0, 0)


def test_reduce_frame_examples():
    assert reduce_frame_to_overlap(FrameWitness(2, 3, 1, 2)) == OverlapWitness(5, 1)
    assert reduce_frame_to_overlap(FrameWitness(0, 0, 3, 2)) == OverlapWitness(0, 2)
    s = "000000"
    g = Grid([[int(s[i + j]) for j in range(3)] for i in range(3)])
    fw = find_frame(g)
    assert fw == FrameWitness(0, 0, 1, 1)
    ow = reduce_frame_to_overlap(fw)
    assert ow == OverlapWitness(0, 1) and ow.holds(s) and s[0:3] == "000"


def _additive_grid(s):
    side = (len(s) + 1) // 2
    return Grid([[s[i + j] for j in range(side)] for i in range(side)]), s[:2 * side - 1]


def test_reduction_on_random_additive_grids():
    rng = random.Random(2024)
    for _ in range(100):
        s = [rng.randrange(2) for _ in range(rng.randint(1, 30))]
        g, covered = _additive_grid(s)
        frame = find_frame(g)
        assert (frame is None) == (find_overlap(covered) is None)
        if frame is not None:
            ow = reduce_frame_to_overlap(frame)
            assert ow.holds(covered)


@given(st.lists(st.integers(0, 1), min_size=3, max_size=24))
def test_every_frame_in_an_additive_grid_reduces_to_an_overlap(s):
    g, covered = _additive_grid(s)
    cells = g.cells.tolist()
    rows = len(cells)
    for m in range(rows):
        for n in range(rows):
            for p in range(1, rows - m):
                for q in range(1, rows - n):
                    fw = FrameWitness(m, n, p, q)
                    if fw.holds(g):
                        assert reduce_frame_to_overlap(fw).holds(covered)


def test_witness_dict_round_trip():
    for w in (OverlapWitness(3, 4), FrameWitness(-1, 2, 3, 4)):
        assert witness_from_dict(w.to_dict()) == w
