"""Immutable simple undirected graphs and elementary metrics.

Vertices are always the dense range ``0..n-1``.  Edges are unordered pairs
stored as ``(min, max)`` tuples.  A per-vertex adjacency bitmask is kept for
graphs up to a configurable size cap (:data:`DEFAULT_BITSET_CAP`); larger
graphs fall back to adjacency lists and sets.
"""

from __future__ import annotations

import math
from collections import deque
from itertools import combinations
from typing import Iterable, Iterator

from .errors import InputError, ParseError

#: Above this vertex count the n-bit adjacency masks are not materialized.
DEFAULT_BITSET_CAP = 4096

INFINITY = math.inf


class VertexSet:
    """Sorted, duplicate-free subset of the vertices of a host graph."""

    __slots__ = ("members", "universe_size")

    def __init__(self, members: Iterable[int], universe_size: int):
        ms = tuple(sorted(set(members)))
        if ms and (ms[0] < 0 or ms[-1] >= universe_size):
            raise InputError(
                f"vertex set member out of range 0..{universe_size - 1}: {ms}"
            )
        self.members = ms
        self.universe_size = universe_size

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, v: int) -> bool:
        return v in self.members

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VertexSet)
            and self.members == other.members
            and self.universe_size == other.universe_size
        )

    def __hash__(self) -> int:
        return hash((self.members, self.universe_size))

    def __repr__(self) -> str:
        return f"VertexSet({list(self.members)}, n={self.universe_size})"

    def as_mask(self) -> int:
        mask = 0
        for v in self.members:
            mask |= 1 << v
        return mask

    def complement_members(self) -> tuple[int, ...]:
        inside = set(self.members)
        return tuple(v for v in range(self.universe_size) if v not in inside)


class Graph:
    """Finite, undirected, simple, loopless graph on vertices ``0..n-1``."""

    __slots__ = ("n", "edges", "edge_set", "adj", "adj_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]],
                 bitset_cap: int = DEFAULT_BITSET_CAP):
        if n < 0:
            raise InputError("vertex count must be non-negative")
        norm = set()
        for u, v in edges:
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
            norm.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges = tuple(sorted(norm))
        self.edge_set = frozenset(self.edges)
        nbr: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            nbr[u].append(v)
            nbr[v].append(u)
        self.adj = tuple(tuple(sorted(a)) for a in nbr)
        if n <= bitset_cap:
            masks = [0] * n
            for u, v in self.edges:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
            self.adj_masks = tuple(masks)
        else:
            self.adj_masks = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edge_set

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(len(a) for a in self.adj))

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def adjacency_masks(g: Graph) -> tuple[int, ...]:
    """Per-vertex open-neighborhood bitmasks (built on demand above the cap)."""
    if g.adj_masks is not None:
        return g.adj_masks
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return tuple(masks)


def closed_masks(g: Graph) -> tuple[int, ...]:
    """Per-vertex closed-neighborhood bitmasks."""
    return tuple(m | (1 << v) for v, m in enumerate(adjacency_masks(g)))


# ---------------------------------------------------------------------------
# parsing and serialization
# ---------------------------------------------------------------------------

def parse_graph(text: str, fmt: str = "edge_list") -> Graph:
    """Parse a graph from text.

    ``edge_list``: first line ``n m`` followed by m lines ``u v`` (0-based).
    Duplicate edge lines collapse to one edge.

    ``dimacs``: ``c`` comment lines, one ``p edge n m`` line, then ``e u v``
    lines with 1-based vertex ids.
    """
    if fmt == "edge_list":
        return _parse_edge_list(text)
    if fmt == "dimacs":
        return _parse_dimacs(text)
    raise ParseError(f"unknown graph format {fmt!r}")


def _parse_edge_list(text: str) -> Graph:
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty input", line=1)
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError(f"expected header 'n m', got {lines[0]!r}", line=1)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError(f"non-integer header {lines[0]!r}", line=1) from None
    if n < 0 or m < 0:
        raise ParseError("negative count in header", line=1)
    edges = []
    seen_edge_lines = 0
    for nr, raw in enumerate(lines[1:], start=2):
        if not raw.strip():
            continue
        if seen_edge_lines >= m:
            raise ParseError(f"more than {m} edge lines", line=nr)
        parts = raw.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {raw!r}", line=nr)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {raw!r}", line=nr) from None
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", line=nr)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex id outside 0..{n - 1} in {raw!r}", line=nr)
        edges.append((u, v))
        seen_edge_lines += 1
    if seen_edge_lines != m:
        raise ParseError(
            f"header promised {m} edges but found {seen_edge_lines}",
            line=len(lines),
        )
    return Graph(n, edges)


def _parse_dimacs(text: str) -> Graph:
    n = None
    edges = []
    for nr, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError("duplicate problem line", line=nr)
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError(f"expected 'p edge n m', got {line!r}", line=nr)
            try:
                n = int(parts[2])
            except ValueError:
                raise ParseError(f"non-integer vertex count in {line!r}", line=nr) from None
        elif parts[0] == "e":
            if n is None:
                raise ParseError("edge line before problem line", line=nr)
            if len(parts) != 3:
                raise ParseError(f"expected 'e u v', got {line!r}", line=nr)
            try:
                u, v = int(parts[1]) - 1, int(parts[2]) - 1
            except ValueError:
                raise ParseError(f"non-integer vertex in {line!r}", line=nr) from None
            if u == v:
                raise ParseError(f"self-loop at vertex {u + 1}", line=nr)
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(f"vertex id outside 1..{n} in {line!r}", line=nr)
            edges.append((u, v))
        else:
            raise ParseError(f"unrecognized line {line!r}", line=nr)
    if n is None:
        raise ParseError("missing 'p edge' line", line=1)
    return Graph(n, edges)


def to_edge_list(g: Graph) -> str:
    """Canonical edge_list serialization: edges sorted lexicographically."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# elementary metrics
# ---------------------------------------------------------------------------

def bfs_distances(g: Graph, source: int) -> list[int | float]:
    dist: list[int | float] = [INFINITY] * g.n
    dist[source] = 0
    q = deque([source])
    while q:
        x = q.popleft()
        for y in g.adj[x]:
            if dist[y] == INFINITY:
                dist[y] = dist[x] + 1
                q.append(y)
    return dist


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return INFINITY not in bfs_distances(g, 0)


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        comps.append(tuple(sorted(comp)))
    return comps


def diameter(g: Graph) -> int | float:
    """Maximum shortest-path length over all vertex pairs; inf if disconnected."""
    if g.n <= 1:
        return 0
    worst = 0
    for v in range(g.n):
        d = max(bfs_distances(g, v))
        if d == INFINITY:
            return INFINITY
        worst = max(worst, d)
    return worst


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle; inf for forests.

    One BFS per start vertex; a non-tree edge seen from start s bounds the
    shortest cycle through s, and the minimum over all starts is exact.
    """
    best = INFINITY
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            if dist[x] * 2 >= best - 1:
                continue
            for y in g.adj[x]:
                if dist[y] == -1:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    q.append(y)
                elif parent[x] != y and parent[y] != x:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def complement(g: Graph) -> Graph:
    edges = [
        (u, v) for u, v in combinations(range(g.n), 2) if (u, v) not in g.edge_set
    ]
    return Graph(g.n, edges)


def induced_subgraph(g: Graph, s: VertexSet | Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``s``; returns (graph, remap) with remap[i] = old id."""
    if isinstance(s, VertexSet):
        if s.universe_size != g.n:
            raise InputError("vertex set universe does not match host graph")
        keep = s.members
    else:
        keep = tuple(sorted(set(s)))
        if keep and (keep[0] < 0 or keep[-1] >= g.n):
            raise InputError("vertex set member out of range")
    idx = {v: i for i, v in enumerate(keep)}
    inside = set(keep)
    edges = [
        (idx[u], idx[v]) for u, v in g.edges if u in inside and v in inside
    ]
    return Graph(len(keep), edges), keep


# ---------------------------------------------------------------------------
# small named graphs (used across tests and gadget constructions)
# ---------------------------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n, [])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, list(combinations(range(n), 2)))


def complete_bipartite_graph(p: int, q: int) -> Graph:
    return Graph(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the center at vertex 0."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    edges = list(a.edges) + [(u + a.n, v + a.n) for u, v in b.edges]
    return Graph(a.n + b.n, edges)
