"""Dominating-set solvers.

``gamma_exact`` is a bitmask branch-and-bound used both directly and as the
fallback of the structured pipelines.  The special-case solvers implement
the polynomial routes for girth-5 diameter-2 graphs (any vertex
neighborhood works), line graphs of diameter at most 2 (via minimum
maximal matching of a root graph), and claw-free diameter-2 graphs
(bounded search, closed-neighborhood peeling, then the line-graph route or
the exact fallback).  Every certificate is re-verified before it is
returned.

The claw-free peeling removes a vertex u with an adjacent v satisfying
N[u] included in N[v]; for adjacent pairs this closed-neighborhood
containment coincides with open containment of N(u) minus v in N(v)
minus u.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import ClassMismatchError, InternalInvariantError, ResourceLimitError
from .graphs import Graph, VertexSet, closed_masks, diameter, girth, induced_subgraph
from .mmm import minimum_maximal_matching
from .patterns import contains_induced
from .recognition import is_line_graph, root_graph

METHODS = (
    "exact", "bounded", "line_diam2", "girth5_diam2", "clawfree_diam2",
    "fallback_exact",
)


@dataclass
class DominationCertificate:
    """A verified dominating set together with the route that found it."""

    set: VertexSet
    gamma: int
    method: str

    def to_json_obj(self) -> dict:
        return {
            "gamma": self.gamma,
            "set": list(self.set.members),
            "method": self.method,
            "verified": True,
        }


def is_dominating_set(g: Graph, members) -> bool:
    masks = closed_masks(g)
    full = (1 << g.n) - 1
    cover = 0
    for v in members:
        cover |= masks[v]
    return cover == full


def _certificate(g: Graph, members, method: str) -> DominationCertificate:
    vs = members if isinstance(members, VertexSet) else VertexSet(members, g.n)
    if not is_dominating_set(g, vs.members):
        raise InternalInvariantError(
            f"{method} produced a non-dominating set {list(vs.members)}"
        )
    return DominationCertificate(set=vs, gamma=len(vs), method=method)


# ---------------------------------------------------------------------------
# exact branch and bound
# ---------------------------------------------------------------------------

def gamma_exact(g: Graph, node_limit: int | None = None) -> DominationCertificate:
    """Minimum dominating set by branch and bound.

    Branches on an undominated vertex with the fewest candidate dominators;
    candidates dominated by another candidate (closed-neighborhood
    containment) are dropped up front; the lower bound packs disjoint
    closed neighborhoods.  ``node_limit`` turns exhaustion into a
    :class:`ResourceLimitError` carrying the best bounds seen.
    """
    n = g.n
    if n == 0:
        return _certificate(g, [], "exact")
    masks = closed_masks(g)
    full = (1 << n) - 1

    # a vertex whose closed neighborhood sits inside another's is never
    # needed as a dominator (ties keep the smaller id)
    allowed = []
    for u in range(n):
        dominated_by_other = any(
            masks[u] & ~masks[v] == 0 and (masks[u] != masks[v] or v < u)
            for v in range(n) if v != u
        )
        if not dominated_by_other:
            allowed.append(u)

    def greedy() -> list[int]:
        chosen: list[int] = []
        covered = 0
        while covered != full:
            best_v, best_gain = -1, -1
            for v in allowed:
                gain = bin(masks[v] & ~covered).count("1")
                if gain > best_gain:
                    best_v, best_gain = v, gain
            chosen.append(best_v)
            covered |= masks[best_v]
        return chosen

    best_set = greedy()
    best_size = len(best_set)

    def lower_bound(covered: int) -> int:
        taken = 0
        blocked = 0
        rest = full & ~covered
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            if not masks[v] & blocked:
                taken += 1
                blocked |= masks[v]
        return taken

    nodes = 0

    def search(covered: int, chosen: list[int]) -> None:
        nonlocal best_set, best_size, nodes
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            raise ResourceLimitError(
                f"branch-and-bound node budget {node_limit} exhausted",
                best_upper=best_size,
                best_lower=len(chosen) + lower_bound(covered),
            )
        if covered == full:
            if len(chosen) < best_size:
                best_size = len(chosen)
                best_set = list(chosen)
            return
        if len(chosen) + lower_bound(covered) >= best_size:
            return
        # undominated vertex with the fewest allowed dominators
        pick, pick_cands = -1, None
        undom = full & ~covered
        rest = undom
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            cands = [c for c in allowed if masks[c] >> v & 1]
            if pick_cands is None or len(cands) < len(pick_cands):
                pick, pick_cands = v, cands
                if len(cands) <= 1:
                    break
        if not pick_cands:
            return  # isolated from every allowed dominator: cannot happen
        pick_cands.sort(key=lambda c: (-bin(masks[c] & undom).count("1"), c))
        for c in pick_cands:
            chosen.append(c)
            search(covered | masks[c], chosen)
            chosen.pop()

    search(0, [])
    return _certificate(g, best_set, "exact")


def gamma_bounded(g: Graph, budget: int) -> DominationCertificate | None:
    """Smallest dominating set of size at most ``budget``, or ``None``.

    Exhaustive subset search in increasing size; intended for small budgets
    where the n^budget scan is the whole point.
    """
    if budget < 1:
        raise ClassMismatchError("budget must be at least 1")
    masks = closed_masks(g)
    full = (1 << g.n) - 1
    if full == 0:
        return _certificate(g, [], "bounded")
    for t in range(1, min(budget, g.n) + 1):
        for combo in combinations(range(g.n), t):
            cover = 0
            for v in combo:
                cover |= masks[v]
            if cover == full:
                return _certificate(g, combo, "bounded")
    return None


# ---------------------------------------------------------------------------
# simplicial reduction
# ---------------------------------------------------------------------------

def _is_simplicial(g: Graph, v: int) -> bool:
    nb = g.neighbors(v)
    return all(g.has_edge(a, b) for a, b in combinations(nb, 2))


def simplicial_reduce(g: Graph, removable=None) -> tuple[Graph, VertexSet]:
    """Peel simplicial vertices whose neighborhood swallows another vertex's.

    Removes v whenever some other vertex u has non-empty N(u) contained in
    N(v) and v is simplicial; the domination number is unchanged by each
    removal.  (u must have a neighbor: for an isolated u the removal can
    change the domination number, so such pairs are skipped.)  Returns the
    reduced graph and the removed vertices in original ids.  ``removable``
    optionally restricts which original vertices may be removed.
    """
    allowed = set(range(g.n)) if removable is None else set(removable)
    current = g
    orig_ids = list(range(g.n))
    removed: list[int] = []
    changed = True
    while changed:
        changed = False
        for v in range(current.n):
            if orig_ids[v] not in allowed or not _is_simplicial(current, v):
                continue
            nv = set(current.neighbors(v))
            for u in range(current.n):
                if u == v:
                    continue
                nu = current.neighbors(u)
                if nu and set(nu) <= nv:
                    removed.append(orig_ids[v])
                    keep = [w for w in range(current.n) if w != v]
                    current, remap = induced_subgraph(current, keep)
                    orig_ids = [orig_ids[w] for w in remap]
                    changed = True
                    break
            if changed:
                break
    return current, VertexSet(removed, g.n)


# ---------------------------------------------------------------------------
# polynomial special cases
# ---------------------------------------------------------------------------

def gamma_girth5_diam2(g: Graph) -> DominationCertificate:
    """Dominating set for a girth-5 diameter-2 graph: any open neighborhood.

    Such graphs are maximum-degree-regular and any two non-adjacent
    vertices have exactly one common closed neighbor; both facts are
    asserted before the certificate is built, so a violation flags an
    impossible input rather than returning garbage.
    """
    if girth(g) != 5 or diameter(g) != 2:
        raise ClassMismatchError("solver requires girth 5 and diameter 2")
    delta = g.max_degree()
    if any(g.degree(v) != delta for v in range(g.n)):
        raise InternalInvariantError(
            "girth-5 diameter-2 graph is not regular; input cannot exist"
        )
    masks = closed_masks(g)
    for u, v in combinations(range(g.n), 2):
        if not g.has_edge(u, v):
            if bin(masks[u] & masks[v]).count("1") != 1:
                raise InternalInvariantError(
                    "non-adjacent pair with closed-neighborhood overlap != 1"
                )
    return _certificate(g, g.neighbors(0), "girth5_diam2")


def gamma_line_diam2(l: Graph) -> DominationCertificate:
    """Dominating set of a line graph with diameter at most 2.

    Reconstructs a root graph, computes its minimum maximal matching, and
    returns the line-graph vertices of the matched edges.  Diameter-0/1
    inputs (complete line graphs) are accepted since the route is equally
    valid there.
    """
    if not is_line_graph(l):
        raise ClassMismatchError("input is not a line graph")
    if diameter(l) > 2:
        raise ClassMismatchError("solver requires diameter at most 2")
    rooted = root_graph(l)
    if rooted is None:
        raise InternalInvariantError(
            "obstruction scan and root reconstruction disagree on line-graphness"
        )
    root = rooted.graph
    if contains_induced(root, "2K2") is not None:
        raise InternalInvariantError(
            "root of a diameter-<=2 line graph must be 2K2-free"
        )
    cap = root.n * (root.n - 1) // 2 + 1
    matching = minimum_maximal_matching(root, cap=cap)
    edge_to_vertex = {e: v for v, e in enumerate(rooted.vertex_edges)}
    members = sorted(edge_to_vertex[e] for e in matching.edges)
    return _certificate(l, members, "line_diam2")


def gamma_clawfree_diam2(g: Graph) -> DominationCertificate:
    """Dominating set of a claw-free diameter-2 graph.

    Pipeline: bounded search up to 3; peel vertices whose closed
    neighborhood is contained in an adjacent vertex's (diameter re-checked
    after every removal); solve the peeled graph by the line-graph route
    when it is one, otherwise fall back to exact search.  Peeled vertices
    are dominated automatically, which the final verification confirms.
    """
    if contains_induced(g, "claw") is not None:
        raise ClassMismatchError("input is not claw-free")
    if diameter(g) != 2:
        raise ClassMismatchError("solver requires diameter 2")
    small = gamma_bounded(g, 3)
    if small is not None:
        return _certificate(g, small.set, "clawfree_diam2")

    current = g
    orig_ids = list(range(g.n))
    while True:
        masks = closed_masks(current)
        victim = -1
        for u in range(current.n):
            for v in current.neighbors(u):
                if u != v and masks[u] & ~masks[v] == 0:
                    victim = u
                    break
            if victim != -1:
                break
        if victim == -1:
            break
        keep = [w for w in range(current.n) if w != victim]
        current, remap = induced_subgraph(current, keep)
        orig_ids = [orig_ids[w] for w in remap]
        if diameter(current) != 2:
            raise InternalInvariantError(
                "closed-neighborhood peeling changed the diameter"
            )

    if is_line_graph(current):
        inner = gamma_line_diam2(current)
        members = [orig_ids[v] for v in inner.set]
        return _certificate(g, members, "clawfree_diam2")
    inner = gamma_exact(current)
    members = [orig_ids[v] for v in inner.set]
    return _certificate(g, members, "fallback_exact")


def solve_gamma(g: Graph, method: str = "auto", budget: int | None = None,
                node_limit: int | None = None) -> DominationCertificate:
    """Route a graph to a dominating-set solver.

    ``auto`` tries the special cases in order (girth-5 diameter-2, line
    graph of diameter at most 2, claw-free diameter-2) and falls back to
    the exact solver.
    """
    if method == "exact":
        return gamma_exact(g, node_limit=node_limit)
    if method == "bounded":
        if budget is None:
            raise ClassMismatchError("bounded method needs a budget")
        cert = gamma_bounded(g, budget)
        if cert is None:
            raise ClassMismatchError(
                f"no dominating set within budget {budget}"
            )
        return cert
    if method == "girth5-diam2":
        return gamma_girth5_diam2(g)
    if method == "line-diam2":
        return gamma_line_diam2(g)
    if method == "clawfree-diam2":
        return gamma_clawfree_diam2(g)
    if method == "auto":
        if girth(g) == 5 and diameter(g) == 2:
            return gamma_girth5_diam2(g)
        if diameter(g) <= 2 and is_line_graph(g):
            return gamma_line_diam2(g)
        if diameter(g) == 2 and contains_induced(g, "claw") is None:
            return gamma_clawfree_diam2(g)
        return gamma_exact(g, node_limit=node_limit)
    raise ClassMismatchError(f"unknown method {method!r}")
