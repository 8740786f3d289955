"""Repetition-free sequences and their brute-force checkers.

Words are digit strings ('0', '1', ...).  The cube-free binary sequence
is generated both from the substitution 0->01, 1->10 and from the bit
parity of the position index; the two constructions are cross-checked in
the test suite.  The square-free ternary sequence comes from the
substitution 0->012, 1->02, 2->1 and is validated by the checker rather
than taken on faith.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple


@dataclass(frozen=True)
class Morphism:
    """Per-letter images; prolongable at 0 means images[0] starts with
    '0' and has length >= 2, which makes the fixed point well defined."""

    images: Tuple[str, ...]

    def __post_init__(self):
        if not self.images:
            raise ValueError("a morphism needs at least one image")
        for img in self.images:
            if not img:
                raise ValueError("images must be nonempty (positive words)")
            for c in img:
                if not c.isdigit() or int(c) >= len(self.images):
                    raise ValueError(f"image letter {c!r} outside alphabet")

    def apply(self, word: str) -> str:
        return "".join(self.images[int(c)] for c in word)

    def is_prolongable(self) -> bool:
        return self.images[0][0] == "0" and len(self.images[0]) >= 2


THUE_MORSE_MORPHISM = Morphism(("01", "10"))
SQUARE_FREE_MORPHISM = Morphism(("012", "02", "1"))


def fixed_point_prefix(m: Morphism, n: int) -> str:
    """First n letters of the unique fixed point starting with 0.

    Iterating the morphism once more only extends the emitted prefix.
    """
    if n < 0:
        raise ValueError("length must be >= 0")
    if not m.is_prolongable():
        raise ValueError("morphism is not prolongable at 0")
    word = "0"
    while len(word) < n:
        word = m.apply(word)
    return word[:n]


def thue_morse_prefix(n: int) -> str:
    """Cube-free binary sequence: letter k is the bit parity of k."""
    if n < 0:
        raise ValueError("length must be >= 0")
    return "".join("01"[k.bit_count() & 1] for k in range(n))


def square_free_ternary_prefix(n: int) -> str:
    return fixed_point_prefix(SQUARE_FREE_MORPHISM, n)


def is_power_free(w: str, k: int) -> Tuple[bool, Optional[Tuple[int, int]]]:
    """Scan for a block repeated k times in a row (brute force).

    Returns (True, None) if no such repetition exists, otherwise
    (False, (position, block length)) for the first repetition in
    lexicographic (position, block length) order.  k=2 checks
    square-freeness, k=3 cube-freeness.
    """
    if k < 2:
        raise ValueError("power must be >= 2")
    data = w.encode("ascii")
    n = len(data)
    span = k - 1
    for i in range(n):
        max_block = (n - i) // k
        for length in range(1, max_block + 1):
            if data[i] != data[i + length]:
                continue
            lo = i
            hi = i + length
            if data[lo : lo + span * length] == data[hi : hi + span * length]:
                return False, (i, length)
    return True, None
