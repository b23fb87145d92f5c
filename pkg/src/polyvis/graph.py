"""Undirected simple graphs, graph-file parsing and Hamiltonian-cycle utilities.

Vertices are dense 0-based integers.  Graphs are immutable after construction;
every operation here is a pure function, so values can be shared freely across
threads or processes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GraphParseError(ValueError):
    """A graph file is malformed; the message names the offending line."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 0..n-1.

    ``edges`` holds each edge once as a sorted pair.  Neighbor sets and sorted
    adjacency lists are derived on construction and cached.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    _nbr_sets: tuple[frozenset[int], ...] = field(
        init=False, repr=False, compare=False, hash=False
    )
    _nbr_sorted: tuple[tuple[int, ...], ...] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            if u > v:
                raise ValueError(f"edge ({u}, {v}) not stored in sorted order")
            nbrs[u].add(v)
            nbrs[v].add(u)
        object.__setattr__(self, "_nbr_sets", tuple(frozenset(s) for s in nbrs))
        object.__setattr__(self, "_nbr_sorted", tuple(tuple(sorted(s)) for s in nbrs))

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Graph":
        seen: set[tuple[int, int]] = set()
        for u, v in pairs:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            e = _norm(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._nbr_sorted[v]

    def nbr_set(self, v: int) -> frozenset[int]:
        return self._nbr_sets[v]

    def degree(self, v: int) -> int:
        return len(self._nbr_sets[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr_sets[u]


@dataclass(frozen=True)
class CycleCandidate:
    """A Hamiltonian cycle in canonical (rotation/reflection-normalized) form.

    Canonical form: starts at the smallest id, and the second element is the
    smaller of the first element's two cyclic neighbors.
    """

    order: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self):
        return iter(self.order)


def canonicalize(order: Sequence[int]) -> CycleCandidate:
    """Normalize a vertex sequence describing an undirected cycle.

    Two sequences describing the same cycle up to rotation and reflection
    canonicalize identically.  Raises ValueError if ``order`` is not a
    permutation of 0..len-1.
    """
    n = len(order)
    if sorted(order) != list(range(n)):
        raise ValueError("not a permutation of 0..n-1")
    if n == 0:
        return CycleCandidate(())
    seq = list(order)
    k = seq.index(0)
    seq = seq[k:] + seq[:k]
    if n >= 3 and seq[-1] < seq[1]:
        seq = [seq[0]] + seq[:0:-1]
    return CycleCandidate(tuple(seq))


def is_cycle_in_graph(g: Graph, c: CycleCandidate) -> bool:
    """True iff every cyclically consecutive pair of ``c`` is an edge of ``g``."""
    order = c.order
    if len(order) != g.n or g.n < 3:
        return False
    return all(g.has_edge(order[i], order[(i + 1) % g.n]) for i in range(g.n))


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Partition of the vertex set into maximal connected sets, sorted by smallest member."""
    seen: set[int] = set()
    comps: list[frozenset[int]] = []
    for start in range(g.n):
        if start in seen:
            continue
        comp = {start}
        seen.add(start)
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    queue.append(w)
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``vertices`` plus the id map back to ``g``.

    Returns ``(sub, old_of)`` where ``old_of[new_id] = old_id``; new ids follow
    the sorted order of the old ones.
    """
    old_of = tuple(sorted(set(vertices)))
    for v in old_of:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range")
    new_of = {old: new for new, old in enumerate(old_of)}
    keep = set(old_of)
    edges = frozenset(
        (new_of[u], new_of[v]) for u, v in g.edges if u in keep and v in keep
    )
    return Graph(len(old_of), edges), old_of


def parse_graph(text: str) -> Graph:
    """Parse a graph file: ``n m`` then m lines ``u v``; ``#`` lines are comments."""
    data: list[tuple[int, str]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        data.append((line_no, stripped))
    if not data:
        raise GraphParseError(1, "missing header 'n m'")

    head_no, head = data[0]
    parts = head.split()
    if len(parts) != 2:
        raise GraphParseError(head_no, f"expected 'n m', got {head!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphParseError(head_no, f"expected integers in header, got {head!r}") from None
    if n < 0 or m < 0:
        raise GraphParseError(head_no, "n and m must be non-negative")

    body = data[1:]
    if len(body) != m:
        where = body[-1][0] if body else head_no
        raise GraphParseError(where, f"expected {m} edge lines, found {len(body)}")

    edges: set[tuple[int, int]] = set()
    for line_no, line in body:
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(line_no, f"expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(line_no, f"expected integers, got {line!r}") from None
        if u == v:
            raise GraphParseError(line_no, f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(line_no, f"vertex id out of range in ({u}, {v})")
        e = _norm(u, v)
        if e in edges:
            raise GraphParseError(line_no, f"duplicate edge {e}")
        edges.add(e)
    return Graph(n, frozenset(edges))


def serialize_graph(g: Graph) -> str:
    """Inverse of parse_graph up to comment/ordering normalization."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"
