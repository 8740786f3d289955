"""Free-group word algebra.

A group word is a flat tuple of letters, each letter a (generator index,
sign) pair.  Generator indices are 0-based; sign +1 is the generator
itself, -1 its inverse.  The textual form writes generator i as the
lowercase letter chr(ord('a') + i) and its inverse as the uppercase
letter, so "abA" is a*b*a^-1.  The empty word prints as "1".

All functions here are pure and operate on immutable tuples.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Optional, Tuple


class GenLetter(NamedTuple):
    index: int
    sign: int  # +1 or -1

    def inverse(self) -> "GenLetter":
        return GenLetter(self.index, -self.sign)


Word = Tuple[GenLetter, ...]

EPSILON: Word = ()


def make_word(letters: Iterable[Tuple[int, int]]) -> Word:
    """Build a word from (index, sign) pairs, validating signs."""
    out = []
    for index, sign in letters:
        if sign not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {sign}")
        if index < 0:
            raise ValueError(f"generator index must be >= 0, got {index}")
        out.append(GenLetter(index, sign))
    return tuple(out)


def gen(index: int) -> GenLetter:
    return GenLetter(index, 1)


def concat(*words: Word) -> Word:
    """Plain concatenation; no reduction is performed."""
    out: Word = ()
    for w in words:
        out = out + w
    return out


def free_reduce(w: Word) -> Word:
    """Remove adjacent letter/inverse pairs until none remain.

    Idempotent and length-nonincreasing; the result represents the same
    free-group element.
    """
    stack: list[GenLetter] = []
    for letter in w:
        if stack and stack[-1].index == letter.index and stack[-1].sign == -letter.sign:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def is_freely_reduced(w: Word) -> bool:
    return all(
        not (w[i].index == w[i + 1].index and w[i].sign == -w[i + 1].sign)
        for i in range(len(w) - 1)
    )


def invert(w: Word) -> Word:
    """Reverse the word and flip every sign."""
    return tuple(letter.inverse() for letter in reversed(w))


def cyclic_reduce(w: Word) -> Tuple[Word, Word]:
    """Split w into (core, u) with w freely equal to u * core * u^-1.

    The core is cyclically reduced: freely reduced and with its first
    letter not the inverse of its last.  Conjugating letters are peeled
    from the ends before free reduction, so a word that collapses to the
    empty word reports the first half of its cancellation tower as the
    conjugator (e.g. a*b*b^-1*a^-1 gives core=1, u=ab).
    """
    core = w
    conjugator: list[GenLetter] = []
    while True:
        while len(core) >= 2 and core[0] == core[-1].inverse():
            conjugator.append(core[0])
            core = core[1:-1]
        reduced = free_reduce(core)
        if reduced == core:
            return core, tuple(conjugator)
        core = reduced


def is_cyclically_reduced(w: Word) -> bool:
    if not is_freely_reduced(w):
        return False
    return len(w) < 2 or w[0] != w[-1].inverse()


def cyclic_shifts(w: Word) -> list[Word]:
    """All rotations of w, starting with w itself."""
    return [w[k:] + w[:k] for k in range(max(len(w), 1))]


def exponent_vector(w: Word, n_gens: int) -> Tuple[int, ...]:
    """Signed count of each generator: the image of w in Z^n_gens."""
    counts = [0] * n_gens
    for letter in w:
        if letter.index >= n_gens:
            raise ValueError(
                f"letter index {letter.index} out of range for {n_gens} generators"
            )
        counts[letter.index] += letter.sign
    return tuple(counts)


def format_word(w: Word) -> str:
    """Textual form; the empty word renders as "1"."""
    if not w:
        return "1"
    chars = []
    for letter in w:
        if letter.index >= 26:
            raise ValueError("text format only supports generator indices < 26")
        c = chr(ord("a") + letter.index)
        chars.append(c if letter.sign > 0 else c.upper())
    return "".join(chars)


def parse_word(text: str, n_gens: Optional[int] = None) -> Word:
    """Parse the textual form; "1" (or "") is the empty word.

    If n_gens is given, letters beyond it are rejected.
    """
    text = text.strip()
    if text in ("", "1"):
        return EPSILON
    letters = []
    for c in text:
        if "a" <= c <= "z":
            letters.append(GenLetter(ord(c) - ord("a"), 1))
        elif "A" <= c <= "Z":
            letters.append(GenLetter(ord(c) - ord("A"), -1))
        else:
            raise ValueError(f"invalid character {c!r} in word {text!r}")
    if n_gens is not None:
        for letter in letters:
            if letter.index >= n_gens:
                raise ValueError(
                    f"letter {format_word((letter,))!r} out of range "
                    f"for {n_gens} generators"
                )
    return tuple(letters)


def conjugate(w: Word, u: Word) -> Word:
    """u * w * u^-1, freely reduced."""
    return free_reduce(concat(u, w, invert(u)))


def commutator(a: Word, b: Word) -> Word:
    """a * b * a^-1 * b^-1, freely reduced."""
    return free_reduce(concat(a, b, invert(a), invert(b)))
