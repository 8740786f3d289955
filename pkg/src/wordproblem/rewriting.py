"""String rewriting systems and bounded equivalence search.

Words here are plain strings over the letters 'a'.. up to the alphabet
size.  A system is an ordered list of productions (lhs, rhs); a directed
system rewrites x*lhs*y to x*rhs*y, a symmetric one additionally carries
the swapped production for every rule.

Search over a symmetric system runs bidirectionally from both words;
over a directed system it is forward reachability from the first word
only.  Every positive answer carries a derivation trace that an
independent replayer can check step by step.

Text format, one declaration per line ('#' starts a comment):

    alpha: a b c d e
    kind: thue            (or semithue)
    rule: ac -> ca        (empty right side written as 1)
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import List, Tuple

from .presentations import SemigroupPresentation
from .search import SearchOutcome, SearchStatus, class_search, forward_search


class SystemKind(enum.Enum):
    SEMI_THUE = "semithue"
    THUE = "thue"


@dataclass(frozen=True)
class RewriteSystem:
    alphabet_size: int
    rules: Tuple[Tuple[str, str], ...]
    kind: SystemKind = SystemKind.SEMI_THUE

    def __post_init__(self):
        if self.alphabet_size < 1 or self.alphabet_size > 26:
            raise ValueError("alphabet size must be between 1 and 26")
        limit = chr(ord("a") + self.alphabet_size - 1)
        for lhs, rhs in self.rules:
            if not lhs:
                raise ValueError("empty rule left side (would match everywhere)")
            for c in lhs + rhs:
                if not ("a" <= c <= limit):
                    raise ValueError(f"rule letter {c!r} outside alphabet")
        if self.kind is SystemKind.THUE:
            rule_set = set(self.rules)
            for lhs, rhs in self.rules:
                if (rhs, lhs) not in rule_set:
                    raise ValueError(
                        f"symmetric system is missing the swap of ({lhs!r}, {rhs!r})"
                    )

    def check_word(self, w: str) -> str:
        limit = chr(ord("a") + self.alphabet_size - 1)
        for c in w:
            if not ("a" <= c <= limit):
                raise ValueError(f"letter {c!r} outside alphabet")
        return w


@dataclass(frozen=True)
class DerivationTrace:
    """Replayable witness: (rule index, position) steps from start to end."""

    start: str
    steps: Tuple[Tuple[int, int], ...]
    end: str


def apply_rule(w: str, sys: RewriteSystem, rule_index: int, pos: int) -> str:
    """Rewrite w at pos with the given rule; the lhs must occur there."""
    if not 0 <= rule_index < len(sys.rules):
        raise IndexError(f"rule index {rule_index} out of range")
    lhs, rhs = sys.rules[rule_index]
    if w[pos : pos + len(lhs)] != lhs or pos < 0:
        raise ValueError(f"rule {rule_index} lhs {lhs!r} does not occur at {pos} in {w!r}")
    return w[:pos] + rhs + w[pos + len(lhs):]


def successors(w: str, sys: RewriteSystem) -> List[Tuple[str, int, int]]:
    """All one-step rewrites of w as (word, rule index, position).

    Ordered by (position, rule index) and deduplicated by resulting word,
    keeping the first witness, so the result is deterministic.
    """
    hits = []
    for idx, (lhs, _) in enumerate(sys.rules):
        pos = w.find(lhs)
        while pos != -1:
            hits.append((pos, idx))
            pos = w.find(lhs, pos + 1)
    hits.sort()
    out = []
    seen = set()
    for pos, idx in hits:
        word = apply_rule(w, sys, idx, pos)
        if word not in seen:
            seen.add(word)
            out.append((word, idx, pos))
    return out


def thue_closure(sys: RewriteSystem) -> RewriteSystem:
    """Symmetric closure: original rules (deduplicated) then missing swaps."""
    rules: list = []
    seen = set()
    for rule in sys.rules:
        if rule not in seen:
            seen.add(rule)
            rules.append(rule)
    for lhs, rhs in list(rules):
        if (rhs, lhs) not in seen:
            seen.add((rhs, lhs))
            rules.append((rhs, lhs))
    return RewriteSystem(sys.alphabet_size, tuple(rules), SystemKind.THUE)


def from_semigroup(p: SemigroupPresentation, symmetric: bool = True) -> RewriteSystem:
    """Equations as productions; by default closed into a symmetric system."""
    base = RewriteSystem(p.alphabet_size, tuple(p.equations), SystemKind.SEMI_THUE)
    return thue_closure(base) if symmetric else base


def replay_trace(sys: RewriteSystem, trace: DerivationTrace) -> str:
    """Re-apply every step, checking occurrences; raises on any mismatch."""
    w = trace.start
    for idx, pos in trace.steps:
        w = apply_rule(w, sys, idx, pos)
    if w != trace.end:
        raise ValueError(f"trace ends at {w!r}, recorded end is {trace.end!r}")
    return w


def _swap_index_map(sys: RewriteSystem) -> dict:
    by_rule = {}
    for i, rule in enumerate(sys.rules):
        by_rule.setdefault(rule, i)
    return {
        i: by_rule[(rhs, lhs)] for i, (lhs, rhs) in enumerate(sys.rules)
    }


def search_equivalence(
    w1: str, w2: str, sys: RewriteSystem, budget: int
) -> SearchOutcome:
    """Bounded search for a derivation linking w1 and w2.

    Symmetric systems get a bidirectional class search; directed systems
    get forward reachability from w1.  The budget caps expanded states.
    REFUTED_EXHAUSTED is returned only when a complete class (or the
    complete forward-reachability set) was enumerated without finding
    the target.
    """
    sys.check_word(w1)
    sys.check_word(w2)

    def succ(w):
        return [(word, (idx, pos)) for word, idx, pos in successors(w, sys)]

    if sys.kind is SystemKind.THUE:
        swap = _swap_index_map(sys)

        def reverse_step(step):
            idx, pos = step
            return (swap[idx], pos)

        status, steps, stats = class_search(
            w1, w2, succ, reverse_step, lambda w: (len(w), w), budget
        )
    else:
        status, steps, stats = forward_search(w1, w2, succ, budget)

    trace = None
    if status is SearchStatus.PROVEN:
        trace = DerivationTrace(w1, tuple(steps), w2)
    return SearchOutcome(status, trace, stats)


def rewrite_bounded(w: str, sys: RewriteSystem, max_steps: int) -> DerivationTrace:
    """Deterministic rewriting: repeatedly take the first successor
    (leftmost position, lowest rule index) until none applies or the
    step limit is reached."""
    sys.check_word(w)
    start = w
    steps = []
    for _ in range(max_steps):
        nexts = successors(w, sys)
        if not nexts:
            break
        word, idx, pos = nexts[0]
        steps.append((idx, pos))
        w = word
    return DerivationTrace(start, tuple(steps), w)


def format_system(sys: RewriteSystem) -> str:
    lines = ["alpha: " + " ".join(chr(ord("a") + i) for i in range(sys.alphabet_size))]
    lines.append(f"kind: {sys.kind.value}")
    for lhs, rhs in sys.rules:
        lines.append(f"rule: {lhs} -> {rhs if rhs else '1'}")
    return "\n".join(lines) + "\n"


def parse_system(text: str) -> RewriteSystem:
    alphabet_size = None
    kind = SystemKind.SEMI_THUE
    rules = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise ValueError(f"line {lineno}: expected 'key: value'")
        key, value = key.strip(), value.strip()
        if key == "alpha":
            names = value.split()
            expected = [chr(ord("a") + i) for i in range(len(names))]
            if not names or names != expected:
                raise ValueError(
                    f"line {lineno}: alphabet must be consecutive letters from 'a'"
                )
            alphabet_size = len(names)
        elif key == "kind":
            try:
                kind = SystemKind(value)
            except ValueError:
                raise ValueError(f"line {lineno}: kind must be thue or semithue") from None
        elif key == "rule":
            sides = [s.strip() for s in value.split("->")]
            if len(sides) != 2 or not sides[0]:
                raise ValueError(f"line {lineno}: expected 'rule: lhs -> rhs'")
            lhs = sides[0]
            rhs = "" if sides[1] == "1" else sides[1]
            if lhs == "1":
                raise ValueError(f"line {lineno}: empty left side is not allowed")
            rules.append((lhs, rhs))
        else:
            raise ValueError(f"line {lineno}: unknown key {key!r}")
    if alphabet_size is None:
        raise ValueError("missing 'alpha:' line")
    return RewriteSystem(alphabet_size, tuple(rules), kind)
