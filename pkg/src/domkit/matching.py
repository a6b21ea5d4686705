"""Matchings: blossom maximum matching, bipartite matching, Hall violators.

The blossom implementation is the plain O(n^3) alternating-forest version
with base-array contraction.  Determinism: augmenting searches start from
free vertices in ascending id, neighbors are scanned in ascending id, and
blossom bases are the unique lowest common ancestors in the search forest,
so a given graph always yields the same matching.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable

from .errors import ContractViolationError, InputError
from .graphs import Graph, VertexSet


class Matching:
    """A set of pairwise vertex-disjoint edges of a host graph."""

    __slots__ = ("edges", "host_n")

    def __init__(self, edges: Iterable[tuple[int, int]], host_n: int):
        norm = sorted((u, v) if u < v else (v, u) for u, v in edges)
        seen: set[int] = set()
        for u, v in norm:
            if u == v:
                raise InputError(f"self-loop ({u}, {v}) in matching")
            if u in seen or v in seen:
                raise InputError(f"edge ({u}, {v}) shares an endpoint with the matching")
            seen.add(u)
            seen.add(v)
        if norm and not (0 <= norm[0][0] and max(seen) < host_n):
            raise InputError("matching endpoint outside host vertex range")
        self.edges = tuple(norm)
        self.host_n = host_n

    def __len__(self) -> int:
        return len(self.edges)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matching)
            and self.edges == other.edges
            and self.host_n == other.host_n
        )

    def __hash__(self) -> int:
        return hash((self.edges, self.host_n))

    def __repr__(self) -> str:
        return f"Matching({list(self.edges)})"

    def covered(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)

    def covers_all(self, vertices: Iterable[int]) -> bool:
        cov = self.covered()
        return all(v in cov for v in vertices)

    def to_json_obj(self) -> list[list[int]]:
        return [[u, v] for u, v in self.edges]


def is_valid_matching(g: Graph, m: Matching) -> bool:
    """Disjointness is enforced at construction; this adds edge existence."""
    return m.host_n == g.n and all(e in g.edge_set for e in m.edges)


def is_maximal_matching(g: Graph, m: Matching) -> bool:
    """True iff no edge of ``g`` can be added to ``m``."""
    if not is_valid_matching(g, m):
        raise ContractViolationError("matching is not a matching of this graph")
    cov = m.covered()
    return all(u in cov or v in cov for u, v in g.edges)


# ---------------------------------------------------------------------------
# general maximum matching (blossom)
# ---------------------------------------------------------------------------

def maximum_matching(g: Graph) -> Matching:
    """Maximum-cardinality matching in a general graph."""
    n = g.n
    match = [-1] * n

    def find_and_augment(root: int) -> bool:
        parent = [-1] * n
        base = list(range(n))
        in_queue = [False] * n
        in_queue[root] = True
        q = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            x = a
            while True:
                x = base[x]
                seen[x] = True
                if match[x] == -1:
                    break
                x = parent[match[x]]
            y = b
            while True:
                y = base[y]
                if seen[y]:
                    return y
                y = parent[match[y]]

        def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
            while base[v] != b:
                in_blossom[base[v]] = True
                in_blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        while q:
            v = q.popleft()
            for to in g.adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    # odd cycle: contract the blossom to its base
                    cur_base = lca(v, to)
                    in_blossom = [False] * n
                    mark_path(v, cur_base, to, in_blossom)
                    mark_path(to, cur_base, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = cur_base
                            if not in_queue[i]:
                                in_queue[i] = True
                                q.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        # augmenting path found; flip it
                        x = to
                        while x != -1:
                            px = parent[x]
                            nxt = match[px]
                            match[x] = px
                            match[px] = x
                            x = nxt
                        return True
                    if not in_queue[match[to]]:
                        in_queue[match[to]] = True
                        q.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            find_and_augment(v)
    edges = [(v, match[v]) for v in range(n) if match[v] > v]
    return Matching(edges, n)


# ---------------------------------------------------------------------------
# bipartite matching and Hall deficiency certificates
# ---------------------------------------------------------------------------

class BipartiteView:
    """A bipartite slice of a host graph: edges between two stable sets."""

    __slots__ = ("left", "right", "adj_left", "host_n")

    def __init__(self, g: Graph, left: VertexSet | Iterable[int],
                 right: VertexSet | Iterable[int]):
        lv = tuple(sorted(set(left)))
        rv = tuple(sorted(set(right)))
        if set(lv) & set(rv):
            raise InputError("bipartite sides are not disjoint")
        for side in (lv, rv):
            for u in side:
                if not 0 <= u < g.n:
                    raise InputError(f"vertex {u} outside host graph")
            for i, u in enumerate(side):
                for v in side[i + 1:]:
                    if g.has_edge(u, v):
                        raise InputError(
                            f"side is not a stable set: edge ({u}, {v})"
                        )
        rset = set(rv)
        self.left = VertexSet(lv, g.n)
        self.right = VertexSet(rv, g.n)
        self.adj_left = {
            u: tuple(w for w in g.neighbors(u) if w in rset) for u in lv
        }
        self.host_n = g.n


def bipartite_max_matching(b: BipartiteView) -> Matching:
    """Maximum matching of a bipartite view via augmenting paths."""
    match_right: dict[int, int] = {}
    match_left: dict[int, int] = {}

    def augment(u: int, visited: set[int]) -> bool:
        for w in b.adj_left[u]:
            if w in visited:
                continue
            visited.add(w)
            if w not in match_right or augment(match_right[w], visited):
                match_right[w] = u
                match_left[u] = w
                return True
        return False

    for u in b.left:
        if u not in match_left:
            augment(u, set())
    return Matching([(u, w) for u, w in match_left.items()], b.host_n)


def covers_left(b: BipartiteView, m: Matching) -> bool:
    return m.covers_all(b.left)


def hall_violator(b: BipartiteView, m: Matching) -> VertexSet | None:
    """Maximal deficiency witness on the left side, or ``None``.

    Returns the set of left vertices reachable by alternating paths from
    the unmatched left vertices.  When ``m`` covers the left side there is
    no witness.  If an alternating path reaches an unmatched right vertex,
    ``m`` was not maximum and the call is rejected.
    """
    match_of: dict[int, int] = {}
    for u, v in m.edges:
        match_of[u] = v
        match_of[v] = u
    free_left = [u for u in b.left if u not in match_of]
    if not free_left:
        return None
    reach_left = set(free_left)
    reach_right: set[int] = set()
    queue = deque(free_left)
    while queue:
        u = queue.popleft()
        for w in b.adj_left[u]:
            if w in reach_right:
                continue
            reach_right.add(w)
            partner = match_of.get(w)
            if partner is None:
                raise ContractViolationError(
                    "matching is not maximum: augmenting path exists"
                )
            if partner not in reach_left:
                reach_left.add(partner)
                queue.append(partner)
    witness = VertexSet(sorted(reach_left), b.host_n)
    if not len(reach_right) < len(witness):
        raise ContractViolationError("deficiency witness failed Hall check")
    return witness
