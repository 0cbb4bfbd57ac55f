"""The Thue-Morse word: three equivalent definitions plus the two-sided extension."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from frameless.errors import ResourceLimitError, UnknownSymbolError, UsageError

DEFAULT_LENGTH_CAP = 1 << 26


class Word(tuple):
    """An immutable finite word; symbols are small ints (or single characters)."""

    @classmethod
    def parse(cls, text: str) -> Word:
        return cls(int(ch) if ch.isdigit() else ch for ch in text)

    def reversed(self) -> Word:
        return Word(self[::-1])

    def __add__(self, other):
        return Word(tuple.__add__(self, tuple(other)))

    def __getitem__(self, key):
        out = tuple.__getitem__(self, key)
        return Word(out) if isinstance(key, slice) else out

    def __str__(self):
        return "".join(str(s) for s in self)

    def __repr__(self):
        return f"Word({str(self)!r})"


def complement(b: int) -> int:
    return 1 - b


def tm_bit(n: int) -> int:
    """Parity of the number of 1 bits in n."""
    if n < 0:
        raise UsageError(f"tm_bit needs n >= 0, got {n}")
    return int(n).bit_count() & 1


# Moore machine: state == output bit, reading a 1 flips the state.
TM_AUTOMATON = {
    "initial": 0,
    "delta": {(0, "0"): 0, (0, "1"): 1, (1, "0"): 1, (1, "1"): 0},
    "output": {0: 0, 1: 1},
}


def tm_bit_automaton(n: int) -> int:
    """t(n) by running the 2-state automaton over base-2 digits, most significant first."""
    if n < 0:
        raise UsageError(f"tm_bit_automaton needs n >= 0, got {n}")
    digits = format(n, "b") if n else ""
    state = TM_AUTOMATON["initial"]
    delta = TM_AUTOMATON["delta"]
    for d in digits:
        state = delta[state, d]
    return TM_AUTOMATON["output"][state]


def tm_bit_z(n: int) -> int:
    """Thue-Morse on all of Z, with t(n) = t(-1-n) for negative n."""
    return tm_bit(n if n >= 0 else -1 - n)


def tm_bits_z(ns) -> np.ndarray:
    """Vectorized tm_bit_z over an integer array."""
    ns = np.asarray(ns, dtype=np.int64)
    folded = np.where(ns >= 0, ns, -1 - ns)
    return (np.bitwise_count(folded) & 1).astype(np.uint8)


def tm_prefix(length: int) -> Word:
    if length < 0:
        raise UsageError(f"length must be >= 0, got {length}")
    return Word(tm_bits_z(np.arange(length)).tolist())


def two_sided_window(lo: int, hi: int) -> Word:
    """Symbols t(lo) .. t(hi) of the two-sided word t^R t."""
    if lo > hi:
        raise UsageError(f"empty window: lo={lo} > hi={hi}")
    return Word(tm_bits_z(np.arange(lo, hi + 1)).tolist())


@dataclass(frozen=True)
class Morphism1D:
    rules: Mapping[int, tuple]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        rules = {a: tuple(img) for a, img in dict(self.rules).items()}
        for a, img in rules.items():
            if not img:
                raise ValueError(f"image of {a!r} is empty")
            for pos, b in enumerate(img):
                if b not in rules:
                    raise UnknownSymbolError(b, pos)
        object.__setattr__(self, "rules", rules)

    def __hash__(self):
        return hash(tuple(sorted(self.rules.items(), key=repr)))

    @classmethod
    def identity(cls, alphabet) -> Morphism1D:
        return cls({a: (a,) for a in alphabet}, name="id")


MU = Morphism1D({0: (0, 1), 1: (1, 0)}, name="mu")
NU = Morphism1D({0: (1, 0), 1: (0, 1)}, name="nu")


def apply_morphism(m: Morphism1D, w: Sequence) -> Word:
    out = []
    rules = m.rules
    for pos, a in enumerate(w):
        try:
            out.extend(rules[a])
        except KeyError:
            raise UnknownSymbolError(a, pos) from None
    return Word(out)


def iterate_morphism(m: Morphism1D, seed: Sequence, k: int, cap: int = DEFAULT_LENGTH_CAP) -> Word:
    """Apply m to seed k times; refuses to build words longer than cap."""
    if k < 0:
        raise UsageError(f"iteration count must be >= 0, got {k}")
    w = Word(seed)
    for pos, a in enumerate(w):
        if a not in m.rules:
            raise UnknownSymbolError(a, pos)
    lengths = {a: len(img) for a, img in m.rules.items()}
    for step in range(k):
        size = sum(lengths[a] for a in w)
        if size > cap:
            raise ResourceLimitError(
                f"iteration {step + 1} would produce {size} symbols (cap {cap})")
        w = apply_morphism(m, w)
    return w
