"""Length-reducing word-problem solver over symmetrized relators.

The step: find a subword a of w that is a prefix of some symmetrized
relator r = a*b with |a| > |r|/2 (strictly more than half), replace a by
b^-1 and freely reduce.  Each step strictly shortens the word, so the
loop terminates in at most |w| steps.  If the empty word is reached the
input was trivial.  If no step applies and the presentation satisfies
C'(1/6), the word is certified nontrivial; otherwise the run is
inconclusive.

Step selection is deterministic: positions are scanned left to right; at
a position the longest matching majority prefix wins, remaining ties go
to the lowest relator index.  b may be empty (a whole relator maps to
the empty word).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .presentations import GroupPresentation, SymmetrizedRelators, max_piece_ratio, symmetrize
from .words import Word, free_reduce, invert


class Verdict(enum.Enum):
    TRIVIAL = "trivial"
    NONTRIVIAL_CERTIFIED = "nontrivial-certified"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class DehnStep:
    relator: int  # index into the symmetrized set
    pos: int  # position in the word being rewritten
    replaced: int  # length of the replaced prefix a


@dataclass(frozen=True)
class DehnOutcome:
    verdict: Verdict
    trace: Tuple[DehnStep, ...]
    final_word: Word


def _first_letter_buckets(s: SymmetrizedRelators) -> dict:
    buckets: dict = {}
    for idx, r in enumerate(s.words):
        buckets.setdefault(r[0], []).append(idx)
    return buckets


def _match_len(w: Word, pos: int, r: Word) -> int:
    n = min(len(w) - pos, len(r))
    i = 0
    while i < n and w[pos + i] == r[i]:
        i += 1
    return i


def _apply(w: Word, s: SymmetrizedRelators, step: DehnStep) -> Word:
    r = s.words[step.relator]
    b = r[step.replaced:]
    return free_reduce(w[: step.pos] + invert(b) + w[step.pos + step.replaced:])


def dehn_step(
    w: Word, s: SymmetrizedRelators, _buckets: Optional[dict] = None
) -> Optional[Tuple[Word, DehnStep]]:
    """One majority-subword replacement, or None if none applies.

    w must be freely reduced; the result is freely reduced and strictly
    shorter.
    """
    buckets = _buckets if _buckets is not None else _first_letter_buckets(s)
    for pos in range(len(w)):
        candidates = buckets.get(w[pos])
        if not candidates:
            continue
        best_len = 0
        best_idx = -1
        for idx in candidates:
            r = s.words[idx]
            m = _match_len(w, pos, r)
            if 2 * m > len(r) and m > best_len:
                best_len, best_idx = m, idx
        if best_idx >= 0:
            step = DehnStep(best_idx, pos, best_len)
            return _apply(w, s, step), step
    return None


def dehn_solve(w: Word, p: GroupPresentation) -> DehnOutcome:
    """Run the step to termination and classify the result.

    A presentation with no relators leaves nothing to replace; free
    reduction then decides the word problem outright, so nonempty
    reduced words are certified nontrivial.
    """
    s = symmetrize(p)
    current = free_reduce(w)
    trace = []
    if s.words:
        buckets = _first_letter_buckets(s)
        while current:
            found = dehn_step(current, s, buckets)
            if found is None:
                break
            current, step = found
            trace.append(step)
    if not current:
        verdict = Verdict.TRIVIAL
    elif not s.words or max_piece_ratio(s) < Fraction(1, 6):
        verdict = Verdict.NONTRIVIAL_CERTIFIED
    else:
        verdict = Verdict.INCONCLUSIVE
    return DehnOutcome(verdict, tuple(trace), current)


def replay_dehn_trace(w: Word, s: SymmetrizedRelators, trace) -> Word:
    """Re-apply recorded steps from scratch, checking each precondition.

    Starts from free_reduce(w), exactly as the solver does.  Raises
    ValueError if any step does not match the word it is applied to.
    """
    current = free_reduce(w)
    for step in trace:
        if not 0 <= step.relator < len(s.words):
            raise ValueError(f"step {step}: relator index out of range")
        r = s.words[step.relator]
        if not 0 < step.replaced <= len(r) or 2 * step.replaced <= len(r):
            raise ValueError(f"step {step}: not a majority prefix of relator")
        if current[step.pos : step.pos + step.replaced] != r[: step.replaced]:
            raise ValueError(f"step {step}: word does not contain the prefix")
        current = _apply(current, s, step)
    return current
