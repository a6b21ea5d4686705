"""Fixed small patterns and exhaustive induced-subgraph search.

The pattern catalog covers the named graphs the recognition layer needs:
stars, small cycles and paths, 2K2, and the nine minimal graphs whose
absence as induced subgraphs characterizes line graphs (F1..F9, with F1
being the claw).  The F edge lists were derived by exhaustive minimality
search over all graphs on up to six vertices; the test suite re-derives
them the same way.
"""

from __future__ import annotations

from .errors import UnsupportedPatternError
from .graphs import Graph, adjacency_masks

#: Patterns larger than this are refused by :func:`contains_induced`.
DEFAULT_PATTERN_CAP = 8


class Pattern:
    """A named small graph searched for as an induced subgraph."""

    __slots__ = ("name", "graph")

    def __init__(self, name: str, graph: Graph):
        self.name = name
        self.graph = graph

    def __repr__(self) -> str:
        return f"Pattern({self.name!r}, n={self.graph.n})"


def _p(name: str, n: int, edges: list[tuple[int, int]]) -> Pattern:
    return Pattern(name, Graph(n, edges))


# Minimal non-line graphs on <= 6 vertices, in the deterministic order the
# minimality search emits them.  F1 is the claw.
_F_EDGES: dict[str, tuple[int, list[tuple[int, int]]]] = {
    "F1": (4, [(0, 3), (1, 3), (2, 3)]),
    "F2": (5, [(0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4)]),
    "F3": (5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3),
               (2, 4), (3, 4)]),
    "F4": (6, [(0, 3), (0, 4), (0, 5), (1, 4), (2, 5), (3, 4), (3, 5)]),
    "F5": (6, [(0, 2), (0, 4), (0, 5), (1, 3), (1, 4), (2, 4), (2, 5),
               (3, 5)]),
    "F6": (6, [(0, 2), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 4),
               (2, 5), (4, 5)]),
    "F7": (6, [(0, 2), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 4),
               (3, 5), (4, 5)]),
    "F8": (6, [(0, 2), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 4),
               (2, 5), (3, 4), (3, 5), (4, 5)]),
    "F9": (6, [(0, 2), (0, 3), (0, 5), (1, 3), (1, 4), (1, 5), (2, 4),
               (2, 5), (3, 5), (4, 5)]),
}

PATTERNS: dict[str, Pattern] = {
    "claw": _p("claw", 4, [(0, 1), (0, 2), (0, 3)]),
    "K14": _p("K14", 5, [(0, 1), (0, 2), (0, 3), (0, 4)]),
    "2K2": _p("2K2", 4, [(0, 1), (2, 3)]),
    "C3": _p("C3", 3, [(0, 1), (1, 2), (0, 2)]),
    "C4": _p("C4", 4, [(0, 1), (1, 2), (2, 3), (0, 3)]),
    "C5": _p("C5", 5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]),
    "C6": _p("C6", 6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]),
    "P4": _p("P4", 4, [(0, 1), (1, 2), (2, 3)]),
}
for _name, (_n, _edges) in _F_EDGES.items():
    PATTERNS[_name] = _p(_name, _n, _edges)

#: The nine forbidden induced subgraphs of line graphs.
LINE_GRAPH_OBSTRUCTIONS: tuple[str, ...] = tuple(_F_EDGES)


def pattern(name: str) -> Pattern:
    try:
        return PATTERNS[name]
    except KeyError:
        raise UnsupportedPatternError(f"unknown pattern {name!r}") from None


def contains_induced(g: Graph, p: Pattern | str,
                     cap: int = DEFAULT_PATTERN_CAP) -> tuple[int, ...] | None:
    """Find ``p`` as an induced subgraph of ``g``.

    Returns an injective vertex map (``occurrence[i]`` is the host vertex
    playing pattern vertex ``i``) or ``None``.  Backtracking search:
    pattern vertices are tried in decreasing-degree order and host
    candidates in ascending id, so the first occurrence is deterministic.
    """
    if isinstance(p, str):
        p = pattern(p)
    pg = p.graph
    if pg.n > cap:
        raise UnsupportedPatternError(
            f"pattern {p.name!r} has {pg.n} vertices, above the cap {cap}"
        )
    if pg.n > g.n:
        return None
    order = sorted(range(pg.n), key=lambda v: (-pg.degree(v), v))
    host_masks = adjacency_masks(g)
    pat_adj = [set(pg.neighbors(v)) for v in range(pg.n)]

    assigned: dict[int, int] = {}
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == len(order):
            return True
        pv = order[i]
        need_deg = pg.degree(pv)
        for hv in range(g.n):
            if used >> hv & 1:
                continue
            if len(g.adj[hv]) < need_deg:
                continue
            ok = True
            for pu, hu in assigned.items():
                want = pu in pat_adj[pv]
                have = bool(host_masks[hv] >> hu & 1)
                if want != have:
                    ok = False
                    break
            if not ok:
                continue
            assigned[pv] = hv
            used |= 1 << hv
            if extend(i + 1):
                return True
            del assigned[pv]
            used &= ~(1 << hv)
        return False

    if extend(0):
        return tuple(assigned[v] for v in range(pg.n))
    return None


def is_free_of(g: Graph, name: str) -> bool:
    return contains_induced(g, name) is None
