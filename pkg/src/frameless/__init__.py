"""Frameless 2-colorings of the plane lattice built from the Thue-Morse word."""

from frameless.errors import DomainError, ResourceLimitError, UnknownSymbolError, UsageError
from frameless.grid import Grid
from frameless.tm_core import (
    MU,
    NU,
    Morphism1D,
    Word,
    apply_morphism,
    iterate_morphism,
    tm_bit,
    tm_bit_automaton,
    tm_bit_z,
    tm_prefix,
    two_sided_window,
)
from frameless.avoidance import (
    FrameWitness,
    OverlapWitness,
    find_frame,
    find_overlap,
    is_overlap_free,
    reduce_frame_to_overlap,
)
from frameless.coloring import ColoringSource, color_at, render_pbm, render_text, window
from frameless.morphism2d import (
    GAMMA,
    QUADRANT_CORNERS,
    TAU,
    Coding,
    Corner,
    Morphism2D,
    apply_2d,
    apply_coding,
    check_corners,
    compose_2d,
    gamma,
    iterate_2d,
    quadrant_plane,
    recurrence_check,
)
from frameless.verifier import (
    BoundedVerdict,
    verify_frameless,
    verify_frameless_via_reduction,
    verify_overlap_free,
)

__version__ = "0.1.0"
