"""Binary-tree term rewriting with pattern variables.

Terms are finite binary trees: every internal node has exactly two
children and carries no symbol of its own (a single binary constructor);
leaves carry an identifier plus an optional type tag.  Leaf names
beginning with '?' are pattern variables; a tagged variable only matches
a leaf with the same tag, an untagged variable matches any subterm.

Positions are direction strings over 'L'/'R' ('' is the root).  A rule
lhs => rhs rewrites a matched subterm by the substituted right side;
used symmetrically (both orientations) this gives the tree analogue of
word equivalence, searched with the same bounded engine as strings.

Text format: leaves are bare names ('A', '?x', 'A:p'), nodes are
parenthesized pairs: ((A B) C).  Rules are written 'lhs => rhs'.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple, Union

from .search import SearchOutcome, SearchStatus, class_search


@dataclass(frozen=True)
class Leaf:
    name: str
    tag: Optional[str] = None

    def is_var(self) -> bool:
        return self.name.startswith("?")


@dataclass(frozen=True)
class Node:
    left: "Term"
    right: "Term"


Term = Union[Leaf, Node]

FORWARD = "fwd"
REVERSE = "rev"


@dataclass(frozen=True)
class TreeStep:
    rule: int
    direction: str  # FORWARD applies lhs->rhs, REVERSE applies rhs->lhs
    path: str

    def reversed(self) -> "TreeStep":
        other = REVERSE if self.direction == FORWARD else FORWARD
        return TreeStep(self.rule, other, self.path)


@dataclass(frozen=True)
class TreeDerivationTrace:
    start: Term
    steps: Tuple[TreeStep, ...]
    end: Term


def term_size(t: Term) -> int:
    if isinstance(t, Leaf):
        return 1
    return 1 + term_size(t.left) + term_size(t.right)


def variables(t: Term) -> frozenset:
    if isinstance(t, Leaf):
        return frozenset([t.name]) if t.is_var() else frozenset()
    return variables(t.left) | variables(t.right)


@dataclass(frozen=True)
class TreeRule:
    lhs: Term
    rhs: Term

    def __post_init__(self):
        extra = variables(self.rhs) - variables(self.lhs)
        if extra:
            raise ValueError(f"right side introduces unbound variables: {sorted(extra)}")

    def is_reversible(self) -> bool:
        """Both orientations applicable: same variables on both sides."""
        return variables(self.lhs) == variables(self.rhs)


def match_subst(pattern: Term, subject: Term) -> Optional[Dict[str, Term]]:
    """The unique substitution taking pattern to subject, if any.

    Repeated variables must bind to equal subterms; a tagged variable
    matches only a leaf carrying the same tag.
    """
    binding: Dict[str, Term] = {}

    def walk(p: Term, s: Term) -> bool:
        if isinstance(p, Leaf):
            if p.is_var():
                if p.tag is not None and not (isinstance(s, Leaf) and s.tag == p.tag):
                    return False
                if p.name in binding:
                    return binding[p.name] == s
                binding[p.name] = s
                return True
            return isinstance(s, Leaf) and s == p
        return isinstance(s, Node) and walk(p.left, s.left) and walk(p.right, s.right)

    return binding if walk(pattern, subject) else None


def substitute(t: Term, binding: Dict[str, Term]) -> Term:
    if isinstance(t, Leaf):
        if t.is_var():
            if t.name not in binding:
                raise ValueError(f"unbound variable {t.name}")
            return binding[t.name]
        return t
    return Node(substitute(t.left, binding), substitute(t.right, binding))


def subterm_at(t: Term, path: str) -> Term:
    for d in path:
        if not isinstance(t, Node):
            raise ValueError(f"path {path!r} leaves the tree")
        if d == "L":
            t = t.left
        elif d == "R":
            t = t.right
        else:
            raise ValueError(f"path direction must be L or R, got {d!r}")
    return t


def replace_at(t: Term, path: str, replacement: Term) -> Term:
    if not path:
        return replacement
    if not isinstance(t, Node):
        raise ValueError(f"path {path!r} leaves the tree")
    if path[0] == "L":
        return Node(replace_at(t.left, path[1:], replacement), t.right)
    if path[0] == "R":
        return Node(t.left, replace_at(t.right, path[1:], replacement))
    raise ValueError(f"path direction must be L or R, got {path[0]!r}")


def apply_tree_rule(t: Term, rule: TreeRule, path: str, direction: str = FORWARD) -> Term:
    """Rewrite the subterm addressed by path; it must match the rule side."""
    if direction == FORWARD:
        src, dst = rule.lhs, rule.rhs
    elif direction == REVERSE:
        src, dst = rule.rhs, rule.lhs
    else:
        raise ValueError(f"direction must be {FORWARD!r} or {REVERSE!r}")
    subject = subterm_at(t, path)
    binding = match_subst(src, subject)
    if binding is None:
        raise ValueError(f"rule does not match at path {path!r}")
    return replace_at(t, path, substitute(dst, binding))


def preorder_paths(t: Term) -> List[Tuple[str, Term]]:
    out = []

    def walk(sub: Term, path: str):
        out.append((path, sub))
        if isinstance(sub, Node):
            walk(sub.left, path + "L")
            walk(sub.right, path + "R")

    walk(t, "")
    return out


def tree_successors(
    t: Term, rules: List[TreeRule], bidirectional: bool = True
) -> List[Tuple[Term, TreeStep]]:
    """One-step rewrites, redexes enumerated in preorder.

    At each position rules are tried in order, forward before reverse;
    results are deduplicated by term, keeping the first witness.
    """
    out = []
    seen = set()
    directions = (FORWARD, REVERSE) if bidirectional else (FORWARD,)
    for path, subject in preorder_paths(t):
        for idx, rule in enumerate(rules):
            for direction in directions:
                if direction == REVERSE and not rule.is_reversible():
                    raise ValueError(
                        f"rule {idx} cannot be applied in reverse: "
                        "its sides carry different variables"
                    )
                src, dst = (
                    (rule.lhs, rule.rhs) if direction == FORWARD else (rule.rhs, rule.lhs)
                )
                binding = match_subst(src, subject)
                if binding is None:
                    continue
                result = replace_at(t, path, substitute(dst, binding))
                if result not in seen:
                    seen.add(result)
                    out.append((result, TreeStep(idx, direction, path)))
    return out


def replay_tree_trace(rules: List[TreeRule], trace: TreeDerivationTrace) -> Term:
    t = trace.start
    for step in trace.steps:
        if not 0 <= step.rule < len(rules):
            raise ValueError(f"step {step}: rule index out of range")
        t = apply_tree_rule(t, rules[step.rule], step.path, step.direction)
    if t != trace.end:
        raise ValueError("trace does not end at the recorded term")
    return t


def search_tree_equivalence(
    a: Term, b: Term, rules: List[TreeRule], budget: int
) -> SearchOutcome:
    """Bounded bidirectional search for a rewrite chain linking a and b.

    Rules are used in both orientations, so every rule must carry the
    same variables on both sides (otherwise the reversed orientation
    would have unbound variables and infinitely many instances).
    """
    for idx, rule in enumerate(rules):
        if not rule.is_reversible():
            raise ValueError(
                f"rule {idx} is not reversible (variable mismatch between sides); "
                "symmetric search requires equal variable sets"
            )

    def succ(t):
        return tree_successors(t, rules, bidirectional=True)

    status, steps, stats = class_search(
        a,
        b,
        succ,
        lambda step: step.reversed(),
        lambda t: (term_size(t), format_term(t)),
        budget,
    )
    trace = None
    if status is SearchStatus.PROVEN:
        trace = TreeDerivationTrace(a, tuple(steps), b)
    return SearchOutcome(status, trace, stats)


def format_term(t: Term) -> str:
    if isinstance(t, Leaf):
        return t.name if t.tag is None else f"{t.name}:{t.tag}"
    return f"({format_term(t.left)} {format_term(t.right)})"


def _tokenize(text: str) -> List[str]:
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c in "()":
            tokens.append(c)
            i += 1
        elif c.isspace():
            i += 1
        else:
            j = i
            while j < len(text) and not text[j].isspace() and text[j] not in "()":
                j += 1
            tokens.append(text[i:j])
            i = j
    return tokens


def _parse_leaf(token: str) -> Leaf:
    name, sep, tag = token.partition(":")
    if not name or (sep and not tag):
        raise ValueError(f"bad leaf token {token!r}")
    return Leaf(name, tag if sep else None)


def parse_term(text: str) -> Term:
    tokens = _tokenize(text)
    pos = 0

    def parse() -> Term:
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError("unexpected end of term")
        tok = tokens[pos]
        pos += 1
        if tok == "(":
            left = parse()
            right = parse()
            if pos >= len(tokens) or tokens[pos] != ")":
                raise ValueError("a node must have exactly two children")
            pos += 1
            return Node(left, right)
        if tok == ")":
            raise ValueError("unexpected ')'")
        return _parse_leaf(tok)

    term = parse()
    if pos != len(tokens):
        raise ValueError(f"trailing input after term: {' '.join(tokens[pos:])!r}")
    return term


def parse_tree_rule(text: str) -> TreeRule:
    sides = text.split("=>")
    if len(sides) != 2:
        raise ValueError("expected 'lhs => rhs'")
    return TreeRule(parse_term(sides[0]), parse_term(sides[1]))


def parse_tree_rules(text: str) -> List[TreeRule]:
    """One 'rule: lhs => rhs' declaration per line; '#' starts a comment."""
    rules = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        if not sep or key.strip() != "rule":
            raise ValueError(f"line {lineno}: expected 'rule: lhs => rhs'")
        rules.append(parse_tree_rule(value))
    return rules


ASSOCIATIVITY = TreeRule(
    Node(Node(Leaf("?x"), Leaf("?y")), Leaf("?z")),
    Node(Leaf("?x"), Node(Leaf("?y"), Leaf("?z"))),
)
