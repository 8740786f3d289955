"""Deterministic single-tape machines and their rewriting encodings.

A machine configuration is written as a word

    <L> left-tape (state)(head symbol) right-tape <R>

over an alphabet holding the tape symbols, one letter per state, the two
end markers and a halt marker.  Each defined transition becomes one
directed rule per possible neighbour: a right move consumes the letter
after the head (or the right end marker, materializing a blank), a left
move consumes the letter before it (or the left end marker).  This keeps
one machine step equal to exactly one rewrite step, which the lockstep
checker verifies.

A state/symbol pair with no transition rewrites to the halt marker;
cleanup rules erase tape letters adjacent to the marker, so a machine
halting after k steps reaches the halt word <L><H><R> in exactly
k + 1 + (remaining tape letters) rewrite steps.

Machine text format ('#' starts a comment):

    states: 2
    symbols: a b        first symbol is the blank
    start: q0
    trans: q0 b -> q0 b R
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from .rewriting import RewriteSystem, SystemKind, successors

Move = str  # "L" or "R"
Transition = Tuple[int, int, Move]  # new state, written symbol, move

BLANK = 0


@dataclass(frozen=True)
class TuringMachine:
    n_states: int
    n_symbols: int  # tape alphabet size, symbol 0 is the blank
    transitions: Dict[Tuple[int, int], Transition] = field(default_factory=dict)
    start_state: int = 0

    def __post_init__(self):
        if self.n_states < 1 or self.n_symbols < 1:
            raise ValueError("need at least one state and one symbol")
        if not 0 <= self.start_state < self.n_states:
            raise ValueError("start state out of range")
        for (q, s), (q2, w, move) in self.transitions.items():
            ok = (
                0 <= q < self.n_states
                and 0 <= q2 < self.n_states
                and 0 <= s < self.n_symbols
                and 0 <= w < self.n_symbols
                and move in ("L", "R")
            )
            if not ok:
                raise ValueError(f"bad transition ({q},{s}) -> ({q2},{w},{move})")


@dataclass(frozen=True)
class Configuration:
    """Materialized tape window; cells beyond it are blank.  The window
    grows when the head steps past an end and never shrinks, mirroring
    the rewriting encoding exactly."""

    left: Tuple[int, ...]
    state: int
    head: int
    right: Tuple[int, ...]

    def tape(self) -> Tuple[int, ...]:
        return self.left + (self.head,) + self.right


def initial_config(m: TuringMachine, tape: Tuple[int, ...]) -> Configuration:
    for s in tape:
        if not 0 <= s < m.n_symbols:
            raise ValueError(f"tape symbol {s} out of range")
    if tape:
        return Configuration((), m.start_state, tape[0], tuple(tape[1:]))
    return Configuration((), m.start_state, BLANK, ())


def tm_step(m: TuringMachine, c: Configuration) -> Optional[Configuration]:
    """One move, or None if no transition is defined (the machine halts)."""
    trans = m.transitions.get((c.state, c.head))
    if trans is None:
        return None
    q2, written, move = trans
    if move == "R":
        if c.right:
            return Configuration(c.left + (written,), q2, c.right[0], c.right[1:])
        return Configuration(c.left + (written,), q2, BLANK, ())
    if c.left:
        return Configuration(c.left[:-1], q2, c.left[-1], (written,) + c.right)
    return Configuration((), q2, BLANK, (written,) + c.right)


@dataclass(frozen=True)
class TmResult:
    halted: bool
    steps: int
    config: Configuration


def tm_run(m: TuringMachine, tape: Tuple[int, ...], max_steps: int) -> TmResult:
    """Simulate up to max_steps moves; halted means an undefined
    transition was reached within that many."""
    if max_steps < 0:
        raise ValueError("max_steps must be >= 0")
    c = initial_config(m, tape)
    steps = 0
    while True:
        nxt = tm_step(m, c)
        if nxt is None:
            return TmResult(True, steps, c)
        if steps == max_steps:
            return TmResult(False, steps, c)
        c = nxt
        steps += 1


@dataclass(frozen=True)
class TmEncoding:
    """Directed rewriting system simulating a machine on configuration
    words, plus the injective configuration-to-word map and the word all
    halting runs drain to."""

    machine: TuringMachine
    system: RewriteSystem
    halt_word: str

    def _char(self, index: int) -> str:
        return chr(ord("a") + index)

    def _state_char(self, q: int) -> str:
        return self._char(self.machine.n_symbols + q)

    @property
    def left_marker(self) -> str:
        return self._char(self.machine.n_symbols + self.machine.n_states)

    @property
    def right_marker(self) -> str:
        return self._char(self.machine.n_symbols + self.machine.n_states + 1)

    @property
    def halt_marker(self) -> str:
        return self._char(self.machine.n_symbols + self.machine.n_states + 2)

    def config_word(self, c: Configuration) -> str:
        return (
            self.left_marker
            + "".join(self._char(s) for s in c.left)
            + self._state_char(c.state)
            + self._char(c.head)
            + "".join(self._char(s) for s in c.right)
            + self.right_marker
        )

    def start_word(self, tape: Tuple[int, ...]) -> str:
        return self.config_word(initial_config(self.machine, tape))

    def cleanup_length(self, final: Configuration) -> int:
        """Rewrite steps from a halting configuration word to the halt
        word: one marker step plus one erasure per remaining tape letter."""
        return 1 + len(final.left) + len(final.right)


def encode(m: TuringMachine) -> TmEncoding:
    """Build the configuration-word rewriting system for m.

    Letters 0..n_symbols-1 are the tape symbols, the next n_states
    letters the states, then the left end marker, right end marker and
    halt marker.
    """
    n_letters = m.n_symbols + m.n_states + 3
    if n_letters > 26:
        raise ValueError("machine too large for the letter alphabet")

    def ch(i: int) -> str:
        return chr(ord("a") + i)

    def state(q: int) -> str:
        return ch(m.n_symbols + q)

    lend = ch(m.n_symbols + m.n_states)
    rend = ch(m.n_symbols + m.n_states + 1)
    halt = ch(m.n_symbols + m.n_states + 2)
    blank = ch(BLANK)

    rules = []
    for (q, s) in sorted(m.transitions):
        q2, written, move = m.transitions[(q, s)]
        here = state(q) + ch(s)
        if move == "R":
            for t in range(m.n_symbols):
                rules.append((here + ch(t), ch(written) + state(q2) + ch(t)))
            rules.append((here + rend, ch(written) + state(q2) + blank + rend))
        else:
            for t in range(m.n_symbols):
                rules.append((ch(t) + here, state(q2) + ch(t) + ch(written)))
            rules.append((lend + here, lend + state(q2) + blank + ch(written)))
    for q in range(m.n_states):
        for s in range(m.n_symbols):
            if (q, s) not in m.transitions:
                rules.append((state(q) + ch(s), halt))
    for t in range(m.n_symbols):
        rules.append((ch(t) + halt, halt))
    for t in range(m.n_symbols):
        rules.append((halt + ch(t), halt))

    system = RewriteSystem(n_letters, tuple(rules), SystemKind.SEMI_THUE)
    return TmEncoding(m, system, lend + halt + rend)


def verify_simulation(m: TuringMachine, tape: Tuple[int, ...], k: int) -> bool:
    """Lockstep oracle: run the machine and rewrite the start word side
    by side for min(k, halting time) steps; every intermediate word must
    be the image of the corresponding configuration, and each pre-halt
    word must have exactly one successor."""
    if k < 0:
        raise ValueError("k must be >= 0")
    enc = encode(m)
    c = initial_config(m, tape)
    w = enc.config_word(c)
    for _ in range(k):
        nxt = tm_step(m, c)
        if nxt is None:
            return True
        succ = successors(w, enc.system)
        if len(succ) != 1:
            return False
        w = succ[0][0]
        c = nxt
        if w != enc.config_word(c):
            return False
    return True


TM_CATALOG_NAMES = ("no_transition", "unary_appender", "loop_right")


def tm_catalog(name: str) -> TuringMachine:
    """Small reference machines used in tests and from the CLI."""
    if name == "no_transition":
        return TuringMachine(1, 2, {})
    if name == "unary_appender":
        # skip right over marks, write one more mark on the first blank, halt
        return TuringMachine(
            2, 2, {(0, 1): (0, 1, "R"), (0, 0): (1, 1, "R")}
        )
    if name == "loop_right":
        return TuringMachine(1, 2, {(0, 0): (0, 0, "R"), (0, 1): (0, 1, "R")})
    raise ValueError(
        f"unknown machine {name!r}; known: {', '.join(TM_CATALOG_NAMES)}"
    )


def format_machine(m: TuringMachine) -> str:
    lines = [f"states: {m.n_states}"]
    lines.append("symbols: " + " ".join(chr(ord("a") + i) for i in range(m.n_symbols)))
    lines.append(f"start: q{m.start_state}")
    for (q, s) in sorted(m.transitions):
        q2, w, move = m.transitions[(q, s)]
        lines.append(
            f"trans: q{q} {chr(ord('a') + s)} -> q{q2} {chr(ord('a') + w)} {move}"
        )
    return "\n".join(lines) + "\n"


def _parse_state(token: str, n_states: int) -> int:
    if not token.startswith("q") or not token[1:].isdigit():
        raise ValueError(f"bad state name {token!r}")
    q = int(token[1:])
    if q >= n_states:
        raise ValueError(f"state {token!r} out of range")
    return q


def parse_machine(text: str) -> TuringMachine:
    n_states = None
    n_symbols = None
    start = 0
    transitions = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise ValueError(f"line {lineno}: expected 'key: value'")
        key, value = key.strip(), value.strip()
        if key == "states":
            n_states = int(value)
        elif key == "symbols":
            names = value.split()
            expected = [chr(ord("a") + i) for i in range(len(names))]
            if not names or names != expected:
                raise ValueError(
                    f"line {lineno}: symbols must be consecutive letters from 'a'"
                )
            n_symbols = len(names)
        elif key == "start":
            if n_states is None:
                raise ValueError(f"line {lineno}: 'start:' before 'states:'")
            start = _parse_state(value, n_states)
        elif key == "trans":
            if n_states is None or n_symbols is None:
                raise ValueError(f"line {lineno}: 'trans:' before 'states:'/'symbols:'")
            parts = value.split()
            if len(parts) != 6 or parts[2] != "->":
                raise ValueError(f"line {lineno}: expected 'trans: qI x -> qJ y L|R'")
            q = _parse_state(parts[0], n_states)
            s = ord(parts[1]) - ord("a")
            q2 = _parse_state(parts[3], n_states)
            w = ord(parts[4]) - ord("a")
            move = parts[5]
            if not (len(parts[1]) == 1 and 0 <= s < n_symbols):
                raise ValueError(f"line {lineno}: unknown symbol {parts[1]!r}")
            if not (len(parts[4]) == 1 and 0 <= w < n_symbols):
                raise ValueError(f"line {lineno}: unknown symbol {parts[4]!r}")
            if move not in ("L", "R"):
                raise ValueError(f"line {lineno}: move must be L or R")
            if (q, s) in transitions:
                raise ValueError(f"line {lineno}: duplicate transition for q{q},{parts[1]}")
            transitions[(q, s)] = (q2, w, move)
        else:
            raise ValueError(f"line {lineno}: unknown key {key!r}")
    if n_states is None or n_symbols is None:
        raise ValueError("missing 'states:' or 'symbols:' line")
    return TuringMachine(n_states, n_symbols, transitions, start)


def parse_tape(text: str, m: TuringMachine) -> Tuple[int, ...]:
    """Tape words use the same letters as the 'symbols:' line; '1' or ''
    is the empty tape."""
    text = text.strip()
    if text in ("", "1"):
        return ()
    out = []
    for c in text:
        s = ord(c) - ord("a")
        if not 0 <= s < m.n_symbols:
            raise ValueError(f"unknown tape symbol {c!r}")
        out.append(s)
    return tuple(out)


def format_tape(tape: Tuple[int, ...]) -> str:
    if not tape:
        return "1"
    return "".join(chr(ord("a") + s) for s in tape)
