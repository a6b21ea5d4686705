"""Graph-class recognition: forbidden subgraphs, line graphs, split graphs.

Line graphs are recognized two independent ways that the test suite pins
against each other: by absence of the nine minimal obstructions (F1..F9)
and by actually reconstructing a root graph whose line graph matches.
Root reconstruction partitions the edge set into cliques with every vertex
in at most two of them (backtracking; fine at desk scale), then reads the
root off the partition.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .errors import InputError, InternalInvariantError, ResourceLimitError
from .graphs import (
    Graph,
    VertexSet,
    adjacency_masks,
    connected_components,
    diameter,
    girth,
    induced_subgraph,
    is_connected,
    star_graph,
)
from .patterns import LINE_GRAPH_OBSTRUCTIONS, contains_induced

ISO_CAP = 9


# ---------------------------------------------------------------------------
# small-graph canonical forms
# ---------------------------------------------------------------------------

def _refine_colors(g: Graph) -> list[int]:
    colors = [g.degree(v) for v in range(g.n)]
    while True:
        keys = [
            (colors[v], tuple(sorted(colors[w] for w in g.neighbors(v))))
            for v in range(g.n)
        ]
        order = {k: i for i, k in enumerate(sorted(set(keys)))}
        new = [order[k] for k in keys]
        if new == colors:
            return colors
        colors = new


def canonical_form(g: Graph, cap: int = ISO_CAP) -> tuple[int, int]:
    """Canonical certificate (n, adjacency code) for graphs with n <= cap.

    Minimizes the upper-triangle adjacency bitstring over all permutations
    compatible with an iterated-degree coloring.
    """
    if g.n > cap:
        raise ResourceLimitError(
            f"canonical form limited to {cap} vertices, got {g.n}"
        )
    n = g.n
    if n == 0:
        return (0, 0)
    colors = _refine_colors(g)
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(colors[v], []).append(v)
    blocks = [classes[c] for c in sorted(classes)]
    pair_index = {}
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            pair_index[(i, j)] = k
            k += 1
    masks = adjacency_masks(g)
    best = None

    def assign(block_idx: int, placement: list[int]) -> None:
        nonlocal best
        if block_idx == len(blocks):
            code = 0
            pos = {v: i for i, v in enumerate(placement)}
            for u, v in g.edges:
                a, b = pos[u], pos[v]
                if a > b:
                    a, b = b, a
                code |= 1 << pair_index[(a, b)]
            if best is None or code < best:
                best = code
            return
        for perm in permutations(blocks[block_idx]):
            assign(block_idx + 1, placement + list(perm))

    assign(0, [])
    assert best is not None
    return (n, best)


def is_isomorphic(g: Graph, h: Graph, cap: int = ISO_CAP) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_form(g, cap) == canonical_form(h, cap)


# ---------------------------------------------------------------------------
# line graphs
# ---------------------------------------------------------------------------

def line_graph_of(g: Graph) -> Graph:
    """Line graph of ``g``.

    Vertex ``i`` of the result is ``g.edges[i]`` (the canonical sorted edge
    order), so ``g.edges`` doubles as the vertex-to-edge map.
    """
    es = g.edges
    ledges = []
    for i, (u1, v1) in enumerate(es):
        for j in range(i + 1, len(es)):
            u2, v2 = es[j]
            if u1 in (u2, v2) or v1 in (u2, v2):
                ledges.append((i, j))
    return Graph(len(es), ledges)


@dataclass
class RootGraphResult:
    """Root graph plus the root edge realizing each line-graph vertex."""

    graph: Graph
    vertex_edges: tuple[tuple[int, int], ...]


def _krausz_partition(l: Graph) -> list[set[int]] | None:
    """Partition E(l) into cliques with every vertex in at most two.

    Backtracking over edges in canonical order.  Each step either grows an
    existing clique class (absorbing all edges between the new vertices and
    the class, which must all exist and be unassigned) or opens a new
    two-vertex class.
    """
    edges = l.edges
    m = len(edges)
    idx = {e: i for i, e in enumerate(edges)}
    masks = adjacency_masks(l)
    assigned = [-1] * m
    class_verts: list[set[int]] = []
    count = [0] * l.n

    def class_mask(S: set[int]) -> int:
        bits = 0
        for w in S:
            bits |= 1 << w
        return bits

    def local_ok(vts) -> bool:
        # a vertex already in two classes must be able to park every
        # remaining edge inside one of them
        for w in vts:
            if count[w] < 2:
                continue
            my_classes = [S for S in class_verts if w in S]
            for x in l.neighbors(w):
                e = (w, x) if w < x else (x, w)
                if assigned[idx[e]] != -1:
                    continue
                if not any(
                    class_mask(S - {w}) & ~masks[x] == 0 for S in my_classes
                ):
                    return False
        return True

    def solve(ptr: int) -> bool:
        while ptr < m and assigned[ptr] != -1:
            ptr += 1
        if ptr == m:
            return True
        u, v = edges[ptr]
        for ci, S in enumerate(class_verts):
            added = [w for w in (u, v) if w not in S]
            if len(added) == 0:
                continue  # edge inside an existing class is always pre-assigned
            if any(count[w] >= 2 for w in added):
                continue
            to_assign = {ptr}
            ok = True
            for w in added:
                for x in S:
                    e = (w, x) if w < x else (x, w)
                    j = idx.get(e)
                    if j is None or assigned[j] != -1:
                        ok = False
                        break
                    to_assign.add(j)
                if not ok:
                    break
            if not ok:
                continue
            for j in to_assign:
                assigned[j] = ci
            S.update(added)
            for w in added:
                count[w] += 1
            if local_ok((u, v)) and solve(ptr):
                return True
            for w in added:
                count[w] -= 1
            S.difference_update(added)
            for j in to_assign:
                assigned[j] = -1
        if count[u] < 2 and count[v] < 2:
            ci = len(class_verts)
            class_verts.append({u, v})
            assigned[ptr] = ci
            count[u] += 1
            count[v] += 1
            if local_ok((u, v)) and solve(ptr):
                return True
            count[u] -= 1
            count[v] -= 1
            class_verts.pop()
            assigned[ptr] = -1
        return False

    if solve(0):
        return class_verts
    return None


def root_graph(l: Graph) -> RootGraphResult | None:
    """Reconstruct a graph whose line graph is ``l``, or ``None``.

    The input must be connected.  The triangle is the one ambiguous case
    (both the triangle and the three-leaf star are roots); the star is
    returned so results stay deterministic and domination-related sizes are
    unaffected.
    """
    if l.n == 0:
        raise InputError("cannot take the root of an empty graph")
    if not is_connected(l):
        raise InputError("root reconstruction expects a connected graph")
    if l.n == 1:
        two = Graph(2, [(0, 1)])
        return RootGraphResult(two, ((0, 1),))
    if l.n == 3 and l.m == 3:
        root = star_graph(3)
        return RootGraphResult(root, root.edges)

    classes = _krausz_partition(l)
    if classes is None:
        return None
    # every vertex must end in exactly two classes; degree-one coverage gets
    # a private singleton class
    holder: list[list[int]] = [[] for _ in range(l.n)]
    for ci, S in enumerate(classes):
        for w in S:
            holder[w].append(ci)
    all_classes = [set(S) for S in classes]
    for v in range(l.n):
        if len(holder[v]) == 1:
            holder[v].append(len(all_classes))
            all_classes.append({v})
        elif len(holder[v]) != 2:
            raise InternalInvariantError(
                f"Krausz partition left vertex {v} in {len(holder[v])} classes"
            )
    root = Graph(len(all_classes), [tuple(holder[v]) for v in range(l.n)])
    vertex_edges = tuple(
        (min(holder[v]), max(holder[v])) for v in range(l.n)
    )
    _verify_root(l, root, vertex_edges)
    return RootGraphResult(root, vertex_edges)


def _verify_root(l: Graph, root: Graph, vertex_edges) -> None:
    if root.m != l.n:
        raise InternalInvariantError("root edge count does not match input order")
    # exact bijection check at any size: adjacency in l must coincide with
    # the corresponding root edges sharing an endpoint
    for u, v in combinations(range(l.n), 2):
        a = set(vertex_edges[u])
        b = set(vertex_edges[v])
        if bool(a & b) != l.has_edge(u, v):
            raise InternalInvariantError(
                f"root reconstruction broke adjacency at pair ({u}, {v})"
            )
    if l.n <= ISO_CAP:
        rebuilt = line_graph_of(root)
        if not is_isomorphic(rebuilt, l):
            raise InternalInvariantError("rebuilt line graph is not isomorphic")


# ---------------------------------------------------------------------------
# split partitions
# ---------------------------------------------------------------------------

def find_split_partition(g: Graph) -> tuple[VertexSet, VertexSet] | None:
    """A (clique, stable) vertex partition if ``g`` is split, else ``None``.

    Degree-sequence test: with degrees sorted non-increasingly and
    m = max{i : d_i >= i-1}, the graph is split iff the first m degrees sum
    to m(m-1) plus the remaining degrees; the first m vertices then form
    the clique.
    """
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    degs = [g.degree(v) for v in order]
    mx = 0
    for i, d in enumerate(degs, start=1):
        if d >= i - 1:
            mx = i
    lhs = sum(degs[:mx])
    rhs = mx * (mx - 1) + sum(degs[mx:])
    if lhs != rhs:
        return None
    clique = order[:mx]
    stable = order[mx:]
    for u, v in combinations(clique, 2):
        if not g.has_edge(u, v):
            raise InternalInvariantError("split degree test produced a non-clique")
    for u, v in combinations(stable, 2):
        if g.has_edge(u, v):
            raise InternalInvariantError("split degree test produced a non-stable part")
    return VertexSet(clique, g.n), VertexSet(stable, g.n)


# ---------------------------------------------------------------------------
# classification report
# ---------------------------------------------------------------------------

_FLAG_PATTERNS = (
    ("triangle_free", "C3"),
    ("c4_free", "C4"),
    ("c5_free", "C5"),
    ("claw_free", "claw"),
    ("k14_free", "K14"),
    ("two_k2_free", "2K2"),
)


@dataclass
class ClassReport:
    """Recognition summary for one graph."""

    diameter: int | float
    girth: int | float
    triangle_free: bool
    c4_free: bool
    c5_free: bool
    claw_free: bool
    k14_free: bool
    two_k2_free: bool
    split: bool
    line_graph: bool
    witnesses: dict[str, tuple[str, tuple[int, ...]]]
    witness: tuple[str, tuple[int, ...]] | None

    def to_json_obj(self) -> dict:
        def enc(x):
            return None if x == float("inf") else x

        return {
            "diameter": enc(self.diameter),
            "girth": enc(self.girth),
            "triangle_free": self.triangle_free,
            "c4_free": self.c4_free,
            "c5_free": self.c5_free,
            "claw_free": self.claw_free,
            "k14_free": self.k14_free,
            "2k2_free": self.two_k2_free,
            "split": self.split,
            "line_graph": self.line_graph,
            "witness": (
                None
                if self.witness is None
                else {"pattern": self.witness[0], "vertices": list(self.witness[1])}
            ),
        }


def classify(g: Graph) -> ClassReport:
    """Compute all class flags, each false one carrying a witness occurrence."""
    flags: dict[str, bool] = {}
    witnesses: dict[str, tuple[str, tuple[int, ...]]] = {}
    for flag, pat in _FLAG_PATTERNS:
        occ = contains_induced(g, pat)
        flags[flag] = occ is None
        if occ is not None:
            witnesses[flag] = (pat, occ)
    line = True
    for pat in LINE_GRAPH_OBSTRUCTIONS:
        occ = contains_induced(g, pat)
        if occ is not None:
            line = False
            witnesses["line_graph"] = (pat, occ)
            break
    split_by_patterns = flags["two_k2_free"] and flags["c4_free"] and flags["c5_free"]
    split_by_partition = find_split_partition(g) is not None
    if split_by_patterns != split_by_partition:
        raise InternalInvariantError(
            "split recognition routes disagree: "
            f"patterns={split_by_patterns} partition={split_by_partition}"
        )
    first = None
    for flag, _ in _FLAG_PATTERNS:
        if not flags[flag]:
            first = witnesses[flag]
            break
    if first is None and not line:
        first = witnesses["line_graph"]
    return ClassReport(
        diameter=diameter(g),
        girth=girth(g),
        triangle_free=flags["triangle_free"],
        c4_free=flags["c4_free"],
        c5_free=flags["c5_free"],
        claw_free=flags["claw_free"],
        k14_free=flags["k14_free"],
        two_k2_free=flags["two_k2_free"],
        split=split_by_partition,
        line_graph=line,
        witnesses=witnesses,
        witness=first,
    )


def is_line_graph(g: Graph) -> bool:
    """Obstruction-based test; components are irrelevant to the F-scan."""
    return all(contains_induced(g, pat) is None for pat in LINE_GRAPH_OBSTRUCTIONS)


def root_graphs_per_component(g: Graph) -> list[RootGraphResult] | None:
    """Roots of every connected component, or ``None`` if any fails."""
    out = []
    for comp in connected_components(g):
        sub, _ = induced_subgraph(g, comp)
        r = root_graph(sub)
        if r is None:
            return None
        out.append(r)
    return out
