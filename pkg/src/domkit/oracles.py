"""Brute-force reference implementations for property tests.

Deliberately simple and slow, and deliberately sharing no code with the
algorithms they check.  Size guards keep accidental misuse from hanging a
test run; the ``DOMSET_ORACLE_LIMIT`` environment variable overrides them.
"""

from __future__ import annotations

import os
from itertools import combinations

from .errors import ResourceLimitError
from .graphs import Graph, VertexSet

_GAMMA_GUARD = 24
_MMM_EDGE_GUARD = 24
_ALPHA_GUARD = 24
_MIS_GUARD = 16


def _guard(value: int, default_limit: int, what: str) -> None:
    limit = default_limit
    env = os.environ.get("DOMSET_ORACLE_LIMIT")
    if env:
        limit = int(env)
    if value > limit:
        raise ResourceLimitError(
            f"{what} size {value} exceeds oracle guard {limit}", count=value
        )


def _closed_masks(g: Graph) -> list[int]:
    masks = [1 << v for v in range(g.n)]
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def gamma_oracle(g: Graph) -> int:
    """Domination number by subset enumeration in increasing size."""
    _guard(g.n, _GAMMA_GUARD, "vertex count")
    masks = _closed_masks(g)
    full = (1 << g.n) - 1
    for t in range(g.n + 1):
        for combo in combinations(range(g.n), t):
            cover = 0
            for v in combo:
                cover |= masks[v]
            if cover == full:
                return t
    return g.n  # unreachable: the full vertex set always dominates


def mmm_oracle(g: Graph) -> int:
    """Minimum maximal matching size.

    Enumerates matchings in increasing size (depth-first over the sorted
    edge list, skipping edge sets that are not matchings early) and returns
    the first size at which a maximal one appears.
    """
    _guard(g.m, _MMM_EDGE_GUARD, "edge count")
    edges = g.edges
    emasks = [(1 << u) | (1 << v) for u, v in edges]

    def is_maximal(covered: int) -> bool:
        return all(em & covered for em in emasks)

    for target in range(min(g.m, g.n // 2) + 1):
        found = _search_matching(emasks, 0, 0, target, is_maximal)
        if found:
            return target
    raise AssertionError("a maximal matching always exists")


def _search_matching(emasks, start, covered, remaining, is_maximal) -> bool:
    if remaining == 0:
        return is_maximal(covered)
    for i in range(start, len(emasks) - remaining + 1):
        if emasks[i] & covered:
            continue
        if _search_matching(emasks, i + 1, covered | emasks[i],
                            remaining - 1, is_maximal):
            return True
    return False


def alpha_oracle(g: Graph) -> int:
    """Independence number by subset enumeration in decreasing size."""
    _guard(g.n, _ALPHA_GUARD, "vertex count")
    adj = _closed_masks(g)
    for t in range(g.n, 0, -1):
        for combo in combinations(range(g.n), t):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if all((adj[v] & mask) == (1 << v) for v in combo):
                return t
    return 0


def mis_oracle(g: Graph) -> list[VertexSet]:
    """All maximal independent sets, by filtering every vertex subset."""
    _guard(g.n, _MIS_GUARD, "vertex count")
    open_adj = [0] * g.n
    for u, v in g.edges:
        open_adj[u] |= 1 << v
        open_adj[v] |= 1 << u
    out = []
    for mask in range(1 << g.n):
        members = [v for v in range(g.n) if mask >> v & 1]
        if any(open_adj[v] & mask for v in members):
            continue
        outside = (v for v in range(g.n) if not mask >> v & 1)
        if all(open_adj[v] & mask for v in outside):
            out.append(VertexSet(members, g.n))
    return out
