"""Group and semigroup presentations.

Group presentations store freely and cyclically reduced relators.
Symmetrization (closure under cyclic shifts and inversion) feeds both
the small-cancellation check and the length-reducing solver in
:mod:`wordproblem.dehn`.

Pieces are measured as common prefixes of two distinct elements of the
symmetrized set; because that set is closed under cyclic shift, this is
equivalent to the common-subword formulation and easy to brute-force.

Text format (one declaration per line, '#' starts a comment):

    gens: a b c          generators, consecutive letters from 'a'
    rel: abAB            one relator per line (group presentations)
    eq: ac = ca          one equation per line (semigroup presentations)

A file may contain 'rel:' lines or 'eq:' lines, not both.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

from .words import (
    Word,
    cyclic_reduce,
    cyclic_shifts,
    format_word,
    invert,
    is_cyclically_reduced,
    make_word,
    parse_word,
)


@dataclass(frozen=True)
class GroupPresentation:
    """Generators and relators; relators are normalized at construction.

    Each relator is replaced by the core of its cyclic reduction;
    relators that collapse to the empty word are dropped.
    """

    n_gens: int
    relators: Tuple[Word, ...]

    def __post_init__(self):
        if self.n_gens < 1:
            raise ValueError("a presentation needs at least one generator")
        normalized = []
        for r in self.relators:
            for letter in r:
                if letter.index >= self.n_gens:
                    raise ValueError(
                        f"relator {format_word(r)} uses generator index "
                        f"{letter.index} but presentation has {self.n_gens}"
                    )
            core, _ = cyclic_reduce(r)
            if core:
                normalized.append(core)
        object.__setattr__(self, "relators", tuple(normalized))


@dataclass(frozen=True)
class SymmetrizedRelators:
    """Relator set closed under cyclic permutation and inversion."""

    words: Tuple[Word, ...]

    def __post_init__(self):
        for w in self.words:
            if not is_cyclically_reduced(w):
                raise ValueError(f"{format_word(w)} is not cyclically reduced")


@dataclass(frozen=True)
class SemigroupPresentation:
    """Positive-word equations over a finite alphabet.

    Equations with equal sides are legal but useless; they are reported
    by :meth:`trivial_equations` rather than rejected.
    """

    alphabet_size: int
    equations: Tuple[Tuple[str, str], ...]

    def __post_init__(self):
        if self.alphabet_size < 1:
            raise ValueError("alphabet must be nonempty")
        limit = chr(ord("a") + self.alphabet_size - 1)
        for lhs, rhs in self.equations:
            for side in (lhs, rhs):
                for c in side:
                    if not ("a" <= c <= limit):
                        raise ValueError(
                            f"letter {c!r} outside alphabet of size {self.alphabet_size}"
                        )

    def trivial_equations(self) -> list[int]:
        return [i for i, (g, h) in enumerate(self.equations) if g == h]


Presentation = Union[GroupPresentation, SemigroupPresentation]


def symmetrize(p: GroupPresentation) -> SymmetrizedRelators:
    """All cyclic shifts of all relators and of their inverses, deduplicated.

    Order is deterministic: relators in presentation order, shifts of the
    relator before shifts of its inverse, first occurrence kept.
    """
    seen = {}
    for r in p.relators:
        for variant in (r, invert(r)):
            for shift in cyclic_shifts(variant):
                if shift not in seen:
                    seen[shift] = None
    return SymmetrizedRelators(tuple(seen.keys()))


def _common_prefix_len(u: Word, v: Word) -> int:
    n = min(len(u), len(v))
    for i in range(n):
        if u[i] != v[i]:
            return i
    return n


def max_piece_ratio(s: SymmetrizedRelators) -> Fraction:
    """Largest |piece| / |shorter host relator| over the symmetrized set.

    A piece is a common prefix of two distinct elements.  A presentation
    satisfies the metric small-cancellation condition C'(lambda) exactly
    when this ratio is < lambda.
    """
    if not s.words:
        raise ValueError("empty symmetrized relator set")
    best = Fraction(0)
    ws = s.words
    for i in range(len(ws)):
        for j in range(i + 1, len(ws)):
            piece = _common_prefix_len(ws[i], ws[j])
            if piece:
                ratio = Fraction(piece, min(len(ws[i]), len(ws[j])))
                if ratio > best:
                    best = ratio
    return best


def _w(text: str) -> Word:
    return parse_word(text)


def surface_presentation(genus: int) -> GroupPresentation:
    """Orientable surface group: 2g generators, one relator of length 4g
    (the product of the g commutators [a_i, b_i])."""
    if genus < 1:
        raise ValueError("genus must be >= 1")
    relator = []
    for i in range(genus):
        a, b = 2 * i, 2 * i + 1
        relator += [(a, 1), (b, 1), (a, -1), (b, -1)]
    return GroupPresentation(2 * genus, (make_word(relator),))


def free_abelian_presentation(rank: int) -> GroupPresentation:
    """Z^rank: all pairwise commutators as relators."""
    if rank < 1:
        raise ValueError("rank must be >= 1")
    relators = []
    for i in range(rank):
        for j in range(i + 1, rank):
            relators.append(make_word([(i, 1), (j, 1), (i, -1), (j, -1)]))
    return GroupPresentation(rank, tuple(relators))


def higman_truncated_presentation(exponents) -> GroupPresentation:
    """Four generators a,b,c,d with a^-e b a^e = c^-e d c^e for each given e.

    The defining exponent set is an explicit finite truncation supplied
    by the caller; each relator is a^-e b a^e (c^-e d c^e)^-1.
    """
    exps = sorted(set(exponents))
    if any(e < 0 for e in exps):
        raise ValueError("exponents must be >= 0")
    relators = []
    for e in exps:
        letters = []
        letters += [(0, -1)] * e + [(1, 1)] + [(0, 1)] * e  # a^-e b a^e
        letters += [(2, -1)] * e + [(3, -1)] + [(2, 1)] * e  # (c^-e d c^e)^-1
        relators.append(make_word(letters))
    return GroupPresentation(4, tuple(relators))


def ceijtin_presentation() -> SemigroupPresentation:
    """The five-letter semigroup whose word problem is undecidable on the
    fixed word aaa; here it serves as a stress case for bounded search."""
    equations = (
        ("ac", "ca"),
        ("ad", "da"),
        ("bc", "cb"),
        ("bd", "db"),
        ("ce", "eca"),
        ("de", "edb"),
        ("cdca", "cdcae"),
        ("caaa", "aaa"),
        ("daaa", "aaa"),
    )
    return SemigroupPresentation(5, equations)


_FIXED_CATALOG = {
    # dihedral group of order 10: sigma^5, tau^2, and tau*sigma*tau*sigma
    # (the relator form of tau*sigma = sigma^-1*tau)
    "dihedral5": lambda: GroupPresentation(2, (_w("aaaaa"), _w("bb"), _w("baba"))),
    "torus": lambda: GroupPresentation(2, (_w("abAB"),)),
    # catalog convention: trefoil knot group as <x,y | x^2 y^-3>
    "trefoil": lambda: GroupPresentation(2, (_w("aaBBB"),)),
    "ceijtin": ceijtin_presentation,
}

CATALOG_NAMES = ("surface", "torus", "dihedral5", "free_abelian", "trefoil",
                 "higman_truncated", "ceijtin")


def catalog(name: str, **params) -> Presentation:
    """Named presentations.

    surface(genus=g), free_abelian(rank=n) and higman_truncated(exponents=E)
    take parameters; the rest take none.
    """
    if name == "surface":
        return surface_presentation(params.pop("genus", 2))
    if name == "free_abelian":
        return free_abelian_presentation(params.pop("rank", 2))
    if name == "higman_truncated":
        return higman_truncated_presentation(params.pop("exponents", (1,)))
    if name in _FIXED_CATALOG:
        if params:
            raise ValueError(f"catalog entry {name!r} takes no parameters")
        return _FIXED_CATALOG[name]()
    raise ValueError(f"unknown catalog entry {name!r}; known: {', '.join(CATALOG_NAMES)}")


def _gens_line(n: int) -> str:
    return "gens: " + " ".join(chr(ord("a") + i) for i in range(n))


def format_presentation(p: Presentation) -> str:
    lines = []
    if isinstance(p, GroupPresentation):
        lines.append(_gens_line(p.n_gens))
        for r in p.relators:
            lines.append(f"rel: {format_word(r)}")
    else:
        lines.append(_gens_line(p.alphabet_size))
        for g, h in p.equations:
            lines.append(f"eq: {g} = {h}")
    return "\n".join(lines) + "\n"


def parse_presentation(text: str) -> Presentation:
    """Parse the text format; rejects letters not declared on the gens line."""
    n_gens = None
    relators = []
    equations = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ValueError(f"line {lineno}: expected 'key: value', got {line!r}")
        key, _, value = line.partition(":")
        key = key.strip()
        value = value.strip()
        if key == "gens":
            names = value.split()
            expected = [chr(ord("a") + i) for i in range(len(names))]
            if not names or names != expected:
                raise ValueError(
                    f"line {lineno}: generators must be consecutive letters "
                    f"from 'a', got {names}"
                )
            n_gens = len(names)
        elif key == "rel":
            if n_gens is None:
                raise ValueError(f"line {lineno}: 'rel:' before 'gens:'")
            relators.append(parse_word(value, n_gens))
        elif key == "eq":
            if n_gens is None:
                raise ValueError(f"line {lineno}: 'eq:' before 'gens:'")
            sides = [s.strip() for s in value.split("=")]
            if len(sides) != 2:
                raise ValueError(f"line {lineno}: expected 'eq: g = h'")
            limit = chr(ord("a") + n_gens - 1)
            for side in sides:
                for c in side:
                    if not ("a" <= c <= limit):
                        raise ValueError(f"line {lineno}: unknown letter {c!r}")
            equations.append((sides[0], sides[1]))
        else:
            raise ValueError(f"line {lineno}: unknown key {key!r}")
    if n_gens is None:
        raise ValueError("missing 'gens:' line")
    if relators and equations:
        raise ValueError("file mixes group relators and semigroup equations")
    if equations:
        return SemigroupPresentation(n_gens, tuple(equations))
    return GroupPresentation(n_gens, tuple(relators))
