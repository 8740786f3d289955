"""Coset enumeration and Cayley graphs of finite quotients.

Enumeration is relator scanning with gap filling: each live coset scans
every relator (defining new cosets to fill gaps) and then fills any
still-undefined generator entries.  Coincidences discovered while
closing a scan are processed immediately with a union-find over coset
ids, keeping the smallest id as representative.  New cosets are numbered
in first-use order, so the final table is deterministic.

Columns pair generators with their inverses: generator i acts through
column 2i, its inverse through column 2i+1.

The subgroup is fixed to the trivial one, so a complete table *is* the
group: vertices of the Cayley graph are cosets and coset 0 is the
identity.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .presentations import GroupPresentation
from .words import GenLetter, Word, free_reduce


class TableStatus(enum.Enum):
    COMPLETE = "complete"
    BUDGET_EXCEEDED = "budget-exceeded"


def _column(letter: GenLetter) -> int:
    return 2 * letter.index + (0 if letter.sign > 0 else 1)


@dataclass(frozen=True)
class CosetTable:
    n_gens: int
    rows: Tuple[Tuple[Optional[int], ...], ...]
    status: TableStatus

    @property
    def n_cosets(self) -> int:
        return len(self.rows)

    def step(self, coset: int, letter: GenLetter) -> Optional[int]:
        return self.rows[coset][_column(letter)]


class _Budget(Exception):
    pass


def todd_coxeter(p: GroupPresentation, max_cosets: int) -> CosetTable:
    """Enumerate cosets of the trivial subgroup, at most max_cosets ever
    defined.  Finite groups whose enumeration fits the budget give a
    COMPLETE table with exactly |G| cosets; otherwise the partial table
    is returned with status BUDGET_EXCEEDED."""
    if max_cosets < 1:
        raise ValueError("coset budget must be >= 1")
    cols = 2 * p.n_gens
    relators = [[_column(letter) for letter in r] for r in p.relators]

    table: List[List[Optional[int]]] = [[None] * cols]
    parent = [0]
    pending: deque = deque()

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def define(alpha: int, c: int) -> int:
        if len(table) >= max_cosets:
            raise _Budget
        beta = len(table)
        table.append([None] * cols)
        parent.append(beta)
        table[alpha][c] = beta
        table[beta][c ^ 1] = alpha
        return beta

    def deduce(alpha: int, c: int, beta: int):
        alpha, beta = find(alpha), find(beta)
        t = table[alpha][c]
        if t is not None:
            if find(t) != beta:
                pending.append((find(t), beta))
                process()
            return
        table[alpha][c] = beta
        u = table[beta][c ^ 1]
        if u is None:
            table[beta][c ^ 1] = alpha
        elif find(u) != alpha:
            pending.append((find(u), alpha))
            process()

    def process():
        while pending:
            x, y = pending.popleft()
            x, y = find(x), find(y)
            if x == y:
                continue
            lo, hi = (x, y) if x < y else (y, x)
            parent[hi] = lo
            row = table[hi]
            for c in range(cols):
                t = row[c]
                if t is None:
                    continue
                u = table[lo][c]
                if u is None:
                    table[lo][c] = t
                elif find(u) != find(t):
                    pending.append((find(u), find(t)))

    def scan_and_fill(alpha: int, rel: List[int]):
        f, i = alpha, 0
        b, j = alpha, len(rel)
        while True:
            while i < j:
                t = table[find(f)][rel[i]]
                if t is None:
                    break
                f = find(t)
                i += 1
            while j > i:
                t = table[find(b)][rel[j - 1] ^ 1]
                if t is None:
                    break
                b = find(t)
                j -= 1
            if i == j:
                f, b = find(f), find(b)
                if f != b:
                    pending.append((f, b))
                    process()
                return
            if i == j - 1:
                deduce(find(f), rel[i], find(b))
                return
            f = define(find(f), rel[i])
            i += 1

    status = TableStatus.COMPLETE
    try:
        alpha = 0
        while alpha < len(table):
            if find(alpha) != alpha:
                alpha += 1
                continue
            for rel in relators:
                scan_and_fill(alpha, rel)
                if find(alpha) != alpha:
                    break
            if find(alpha) == alpha:
                for c in range(cols):
                    if table[alpha][c] is None:
                        define(alpha, c)
            alpha += 1
    except _Budget:
        status = TableStatus.BUDGET_EXCEEDED

    live = [x for x in range(len(table)) if find(x) == x]
    renumber = {old: new for new, old in enumerate(live)}
    rows = tuple(
        tuple(renumber[find(t)] if t is not None else None for t in table[old])
        for old in live
    )
    if status is TableStatus.COMPLETE:
        assert all(t is not None for row in rows for t in row)
    return CosetTable(p.n_gens, rows, status)


@dataclass(frozen=True)
class CayleyGraph:
    """Finite Cayley graph: vertex 0 is the identity; every vertex has one
    outgoing edge per generator and per inverse, and the edge labelled s
    from u to v is mirrored by the edge labelled s^-1 from v to u."""

    n_gens: int
    neighbors: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.neighbors)
        for u, row in enumerate(self.neighbors):
            if len(row) != 2 * self.n_gens:
                raise ValueError(f"vertex {u}: expected {2 * self.n_gens} edges")
            for c, v in enumerate(row):
                if not 0 <= v < n:
                    raise ValueError(f"vertex {u}: edge target {v} out of range")
                if self.neighbors[v][c ^ 1] != u:
                    raise ValueError(
                        f"edge {u} -[{c}]-> {v} has no inverse edge back"
                    )

    @property
    def n_vertices(self) -> int:
        return len(self.neighbors)

    def step(self, vertex: int, letter: GenLetter) -> int:
        if not 0 <= letter.index < self.n_gens:
            raise ValueError(f"letter index {letter.index} out of range")
        return self.neighbors[vertex][_column(letter)]

    def trace(self, w: Word, start: int = 0) -> int:
        vertex = start
        for letter in w:
            vertex = self.step(vertex, letter)
        return vertex


def to_cayley_graph(t: CosetTable) -> CayleyGraph:
    if t.status is not TableStatus.COMPLETE:
        raise ValueError("coset table is incomplete; cannot build a Cayley graph")
    return CayleyGraph(t.n_gens, t.rows)


def word_problem_finite(w: Word, g: CayleyGraph) -> bool:
    """True iff w traces from the identity vertex back to it."""
    return g.trace(free_reduce(w)) == 0


def _bfs_distances(g: CayleyGraph, source: int) -> List[int]:
    dist = [-1] * g.n_vertices
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.neighbors[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def geodesic_distance(g: CayleyGraph, u: int, v: int) -> int:
    dist = _bfs_distances(g, u)
    if dist[v] < 0:
        raise ValueError("graph is disconnected")
    return dist[v]


def _lex_least_geodesic(g: CayleyGraph, dist_to, u: int, v: int) -> List[int]:
    # Greedy walk: among neighbours one step closer to v, take the smallest.
    path = [u]
    cur = u
    while cur != v:
        cur = min(n for n in g.neighbors[cur] if dist_to[v][n] == dist_to[v][cur] - 1)
        path.append(cur)
    return path


def estimate_delta(g: CayleyGraph) -> int:
    """Largest thinness defect over all geodesic triangles on vertex triples.

    One geodesic per unordered vertex pair (the lexicographically least)
    is used; the defect of a side is how far one of its points can be
    from the union of the other two sides.  Cubic in the vertex count,
    intended for small graphs.
    """
    n = g.n_vertices
    dist = [_bfs_distances(g, s) for s in range(n)]
    if any(d < 0 for row in dist for d in row):
        raise ValueError("graph is disconnected")
    if n < 3:
        return 0

    geodesic = {}
    for u in range(n):
        for v in range(u + 1, n):
            geodesic[(u, v)] = _lex_least_geodesic(g, dist, u, v)

    def side(u, v):
        return geodesic[(u, v)] if u < v else geodesic[(v, u)]

    delta = 0
    for x in range(n):
        for y in range(x + 1, n):
            for z in range(y + 1, n):
                sides = (side(x, y), side(y, z), side(x, z))
                for i in range(3):
                    others = sides[(i + 1) % 3] + sides[(i + 2) % 3]
                    for point in sides[i]:
                        defect = min(dist[point][q] for q in others)
                        if defect > delta:
                            delta = defect
    return delta


def to_tgf(g: CayleyGraph) -> str:
    """Trivial graph format: vertex lines, '#', then one labelled edge per
    vertex and positive generator (inverse edges are implied)."""
    lines = [f"{v} {v}" for v in range(g.n_vertices)]
    lines.append("#")
    for u in range(g.n_vertices):
        for i in range(g.n_gens):
            lines.append(f"{u} {g.neighbors[u][2 * i]} {chr(ord('a') + i)}")
    return "\n".join(lines) + "\n"
