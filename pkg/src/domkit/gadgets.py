"""Hardness-reduction instance generators and their verification harness.

Three constructions:

- ``reduce_cubic_clawfree``: Dominating Set on a cubic graph to Dominating
  Set on a claw-free graph of prescribed diameter d >= 3.  Every source
  vertex becomes a 12-vertex gadget (a six-cycle braced by three triangles,
  one outer vertex per triangle); the triangle apexes of all gadgets plus a
  hub form one big clique, and a path dangles from the hub to stretch the
  diameter.
- ``reduce_vc_k14``: Vertex Cover to Dominating Set on a K14-free graph of
  diameter 2, using two copies of the edge set and selector vertices for
  pairs of non-incident edge copies.
- ``reduce_split_trianglefree``: Dominating Set on a split diameter-2
  graph to Dominating Set on a triangle-free diameter-2 graph, by copying
  the clique side once and the stable side twice and complementing the
  clique-to-stable adjacency on the second stable copy.

Every generator re-checks the structural claims (target class, diameter,
gadget wiring) before returning and refuses the instance otherwise.
``verify_reduction`` additionally runs oracle-backed forward and
equivalence checks at desk scale.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations

from .domset import gamma_exact, is_dominating_set, simplicial_reduce
from .errors import GadgetWiringError, InputError, ResourceLimitError
from .graphs import Graph, VertexSet, diameter, girth, induced_subgraph, is_connected
from .patterns import contains_induced

logger = logging.getLogger(__name__)

KINDS = ("cubic_clawfree_d", "vc_k14_diam2", "split_trianglefree_diam2")

#: outer index left exposed -> the pair of six-cycle offsets that covers the
#: rest of the gadget (hub assumed to cover the triangle apexes)
_EXPOSING_PAIR = {0: (2, 5), 1: (1, 4), 2: (0, 3)}


@dataclass
class ReductionInstance:
    """Output graph, budget, and per-vertex provenance of a reduction."""

    graph: Graph
    kprime: int
    kind: str
    provenance: dict[int, dict] = field(repr=False)

    def sidecar_json_obj(self) -> dict:
        return {
            "kind": self.kind,
            "kprime": self.kprime,
            "n": self.graph.n,
            "provenance": {str(v): r for v, r in sorted(self.provenance.items())},
        }


def _check(condition: bool, message: str) -> None:
    if not condition:
        raise GadgetWiringError(message)


# ---------------------------------------------------------------------------
# cubic -> claw-free with diameter d
# ---------------------------------------------------------------------------

def reduce_cubic_clawfree(g: Graph, k: int, d: int) -> ReductionInstance:
    """Reduction from cubic Dominating Set to claw-free diameter-d instances.

    Budget: 2n+k+1 for d=3 and 2n+k+1+floor(d/3) for d>=4.  A single
    dangling path realizes the d>=4 budgets only when d is not a multiple
    of three; those diameters are refused rather than producing an
    instance whose budget is off by one.
    """
    n = g.n
    if any(g.degree(v) != 3 for v in range(n)):
        raise InputError("source graph must be cubic")
    if not is_connected(g):
        raise InputError("source graph must be connected")
    if d < 3:
        raise InputError("diameter parameter must be at least 3")
    if d >= 6 and d % 3 == 0:
        raise InputError(
            "a dangling path cannot realize the stated budget when d is a "
            "multiple of three; refusing to build an unsound instance"
        )
    if k < 0:
        raise InputError("budget must be non-negative")

    edges: list[tuple[int, int]] = []
    prov: dict[int, dict] = {}

    def inner(v: int, j: int) -> int:
        return 12 * v + j

    def grey(v: int, i: int) -> int:
        return 12 * v + 6 + i

    def outer(v: int, i: int) -> int:
        return 12 * v + 9 + i

    for v in range(n):
        for j in range(6):
            edges.append((inner(v, j), inner(v, (j + 1) % 6)))
            prov[inner(v, j)] = {"role": "inner", "vertex": v, "index": j}
        for i in range(3):
            a, b = inner(v, 2 * i), inner(v, 2 * i + 1)
            edges.append((grey(v, i), a))
            edges.append((grey(v, i), b))
            edges.append((outer(v, i), grey(v, i)))
            edges.append((outer(v, i), a))
            edges.append((outer(v, i), b))
            prov[grey(v, i)] = {"role": "grey", "vertex": v, "index": i}

    hub = 12 * n
    prov[hub] = {"role": "hub"}
    clique = [grey(v, i) for v in range(n) for i in range(3)] + [hub]
    for a, b in combinations(clique, 2):
        edges.append((a, b))

    # original edges, one per pair of outer vertices
    incident = {v: sorted(e for e in g.edges if v in e) for v in range(n)}
    for u, v in g.edges:
        i = incident[u].index((u, v))
        j = incident[v].index((u, v))
        edges.append((outer(u, i), outer(v, j)))
        prov[outer(u, i)] = {"role": "outer", "vertex": u, "index": i,
                             "edge": [u, v]}
        prov[outer(v, j)] = {"role": "outer", "vertex": v, "index": j,
                             "edge": [u, v]}

    tail_len = d - 2
    tail = [hub + 1 + j for j in range(tail_len)]
    prev = hub
    for idx, t in enumerate(tail, start=1):
        edges.append((prev, t))
        prov[t] = {"role": "tail", "index": idx}
        prev = t

    total = hub + 1 + tail_len
    gp = Graph(total, edges)

    kprime = 2 * n + k + 1 + (d // 3 if d >= 4 else 0)

    _check(contains_induced(gp, "claw") is None, "gadget graph is not claw-free")
    _check(diameter(gp) == d, f"gadget graph diameter is not {d}")
    for v in range(n):
        sub, _ = induced_subgraph(gp, [inner(v, j) for j in range(6)])
        _check(sub.m == 6 and girth(sub) == 6,
               f"inner six of gadget {v} do not induce a six-cycle")
        for i in range(3):
            ext = [w for w in gp.neighbors(outer(v, i)) if not 12 * v <= w < 12 * (v + 1)]
            _check(len(ext) == 1,
                   f"outer vertex {i} of gadget {v} has {len(ext)} external neighbors")
    return ReductionInstance(graph=gp, kprime=kprime, kind="cubic_clawfree_d",
                             provenance=prov)


def cubic_forward_solution(inst: ReductionInstance, source: Graph,
                           dominating: list[int]) -> list[int]:
    """The constructive dominating set for a source dominating set.

    Hub, all three outers for chosen source vertices, a covering inner pair
    for the others (exposing the outer wired toward a chosen neighbor), and
    a greedy cover of the dangling path.
    """
    idx = _cubic_index(inst)
    dom = set(dominating)
    out = [idx["hub"]]
    for v in range(source.n):
        if v in dom:
            out.extend(idx["outer"][v])
        else:
            witness = min(w for w in source.neighbors(v) if w in dom)
            e = (v, witness) if v < witness else (witness, v)
            expose = next(
                i for i in range(3) if idx["outer_edge"][(v, i)] == e
            )
            a, b = _EXPOSING_PAIR[expose]
            out.append(idx["inner"][v][a])
            out.append(idx["inner"][v][b])
    tail = idx["tail"]
    covered = {tail[0]} if tail else set()
    for pos, t in enumerate(tail):
        if t in covered:
            continue
        pick = tail[min(pos + 1, len(tail) - 1)]
        out.append(pick)
        covered.add(pick)
        j = tail.index(pick)
        for nb in (j - 1, j + 1):
            if 0 <= nb < len(tail):
                covered.add(tail[nb])
    return sorted(out)


def _cubic_index(inst: ReductionInstance) -> dict:
    inner: dict[int, list[int]] = {}
    outer: dict[int, list[int]] = {}
    outer_edge: dict[tuple[int, int], tuple[int, int]] = {}
    tail: list[tuple[int, int]] = []
    hub = None
    for gv, role in inst.provenance.items():
        r = role["role"]
        if r == "inner":
            inner.setdefault(role["vertex"], [0] * 6)[role["index"]] = gv
        elif r == "outer":
            outer.setdefault(role["vertex"], [0] * 3)[role["index"]] = gv
            outer_edge[(role["vertex"], role["index"])] = tuple(role["edge"])
        elif r == "hub":
            hub = gv
        elif r == "tail":
            tail.append((role["index"], gv))
    return {
        "inner": inner,
        "outer": outer,
        "outer_edge": outer_edge,
        "hub": hub,
        "tail": [gv for _, gv in sorted(tail)],
    }


# ---------------------------------------------------------------------------
# vertex cover -> K14-free with diameter 2
# ---------------------------------------------------------------------------

def reduce_vc_k14(g: Graph, k: int) -> ReductionInstance:
    """Reduction from Vertex Cover to Dominating Set on K14-free diameter-2."""
    if g.m < 1:
        raise InputError("source graph needs at least one edge")
    if k < 0:
        raise InputError("budget must be non-negative")
    n, m = g.n, g.m
    e1 = {e: n + i for i, e in enumerate(g.edges)}
    e2 = {e: n + m + i for i, e in enumerate(g.edges)}
    edges: list[tuple[int, int]] = []
    prov: dict[int, dict] = {v: {"role": "vertex_copy", "source": v} for v in range(n)}
    for e, gv in e1.items():
        prov[gv] = {"role": "edge_copy1", "source": list(e)}
    for e, gv in e2.items():
        prov[gv] = {"role": "edge_copy2", "source": list(e)}

    for copies in (e1, e2):
        for u in range(n):
            block = [u] + [copies[e] for e in g.edges if u in e]
            for a, b in combinations(block, 2):
                edges.append((a, b))

    copy_list = [(gv, e) for e, gv in e1.items()] + [(gv, e) for e, gv in e2.items()]
    copy_list.sort()
    sel = n + 2 * m
    selectors = []
    for (ga, ea), (gb, eb) in combinations(copy_list, 2):
        if set(ea) & set(eb):
            continue
        edges.append((sel, ga))
        edges.append((sel, gb))
        prov[sel] = {
            "role": "pair_selector",
            "first": {"edge": list(ea), "copy": 1 if ga < n + m else 2},
            "second": {"edge": list(eb), "copy": 1 if gb < n + m else 2},
        }
        selectors.append(sel)
        sel += 1

    hub = sel
    prov[hub] = {"role": "hub"}
    big_clique = list(range(n)) + selectors + [hub]
    for a, b in combinations(big_clique, 2):
        edges.append((a, b))

    gp = Graph(hub + 1, edges)
    _check(contains_induced(gp, "K14") is None, "instance is not K14-free")
    _check(diameter(gp) == 2, "instance diameter is not 2")
    return ReductionInstance(graph=gp, kprime=k, kind="vc_k14_diam2",
                             provenance=prov)


def vc_forward_solution(inst: ReductionInstance, cover: list[int]) -> list[int]:
    """Vertex-cover copies inside the big clique dominate the instance."""
    copies = {
        role["source"]: gv
        for gv, role in inst.provenance.items()
        if role["role"] == "vertex_copy"
    }
    return sorted(copies[v] for v in cover)


# ---------------------------------------------------------------------------
# split diameter-2 -> triangle-free diameter-2
# ---------------------------------------------------------------------------

def reduce_split_trianglefree(
    g: Graph, partition: tuple[VertexSet, VertexSet], k: int
) -> ReductionInstance:
    """Reduction from split diameter-2 Dominating Set to triangle-free diameter-2.

    The stable side must carry no nested neighborhoods; inputs that do are
    reduced first (domination number is preserved) with a logged notice.
    """
    clique_side, stable_side = partition
    if k < 0:
        raise InputError("budget must be non-negative")
    _validate_split(g, clique_side, stable_side)
    if diameter(g) != 2:
        raise InputError("source graph must have diameter 2")

    reduced, removed = simplicial_reduce(g, removable=stable_side.members)
    if len(removed):
        logger.warning(
            "stable side carried nested neighborhoods; removed %s first",
            list(removed.members),
        )
        survivors = [v for v in range(g.n) if v not in set(removed.members)]
        work, remap = reduced, tuple(survivors)
        if diameter(work) != 2:
            raise InputError("source graph lost diameter 2 after reduction")
    else:
        work, remap = g, tuple(range(g.n))

    removed_set = set(removed.members)
    kv = [v for v in clique_side if v not in removed_set]
    sv = [v for v in stable_side if v not in removed_set]
    back = {orig: i for i, orig in enumerate(remap)}

    nk, ns = len(kv), len(sv)
    k1 = {orig: i for i, orig in enumerate(kv)}
    s1 = {orig: nk + i for i, orig in enumerate(sv)}
    s2 = {orig: nk + ns + i for i, orig in enumerate(sv)}
    t = nk + 2 * ns
    hub = t + 1

    edges = []
    prov: dict[int, dict] = {}
    for orig, gv in k1.items():
        prov[gv] = {"role": "clique_copy", "source": orig}
        edges.append((t, gv))
    for orig, gv in s1.items():
        prov[gv] = {"role": "stable_copy1", "source": orig}
        edges.append((gv, s2[orig]))
    for orig, gv in s2.items():
        prov[gv] = {"role": "stable_copy2", "source": orig}
        edges.append((hub, gv))
    prov[t] = {"role": "t"}
    prov[hub] = {"role": "hub"}
    edges.append((t, hub))
    for u in kv:
        for v in sv:
            if work.has_edge(back[u], back[v]):
                edges.append((k1[u], s1[v]))
            else:
                edges.append((k1[u], s2[v]))

    gp = Graph(hub + 1, edges)
    _check(contains_induced(gp, "C3") is None, "instance is not triangle-free")
    _check(diameter(gp) == 2, "instance diameter is not 2")
    for part in (list(k1.values()), list(s1.values()), list(s2.values()), [t], [hub]):
        for a, b in combinations(part, 2):
            _check(not gp.has_edge(a, b), "copy layer is not a stable set")
    return ReductionInstance(graph=gp, kprime=k + 1,
                             kind="split_trianglefree_diam2", provenance=prov)


def _validate_split(g: Graph, clique_side: VertexSet, stable_side: VertexSet) -> None:
    if clique_side.universe_size != g.n or stable_side.universe_size != g.n:
        raise InputError("partition does not match the graph")
    if set(clique_side) & set(stable_side):
        raise InputError("partition sides overlap")
    if len(clique_side) + len(stable_side) != g.n:
        raise InputError("partition does not cover the graph")
    for a, b in combinations(clique_side.members, 2):
        if not g.has_edge(a, b):
            raise InputError("clique side is not a clique")
    for a, b in combinations(stable_side.members, 2):
        if g.has_edge(a, b):
            raise InputError("stable side is not stable")


def split_forward_solution(inst: ReductionInstance,
                           dominating: list[int]) -> list[int]:
    """Copies of a source dominating set (clique copy or first stable copy) plus t."""
    to_copy = {}
    t = None
    for gv, role in inst.provenance.items():
        if role["role"] in ("clique_copy", "stable_copy1"):
            to_copy[role["source"]] = gv
        elif role["role"] == "t":
            t = gv
    out = [to_copy[v] for v in dominating]
    out.append(t)
    return sorted(out)


# ---------------------------------------------------------------------------
# verification harness
# ---------------------------------------------------------------------------

@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class ReductionReport:
    kind: str
    checks: list[CheckResult]
    complete: bool = True

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json_obj(self) -> dict:
        return {
            "kind": self.kind,
            "complete": self.complete,
            "all_passed": self.all_passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.checks
            ],
        }


def _gamma_set_bruteforce(g: Graph) -> list[int]:
    masks = [1 << v for v in range(g.n)]
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    full = (1 << g.n) - 1
    for size in range(g.n + 1):
        for combo in combinations(range(g.n), size):
            agg = 0
            for v in combo:
                agg |= masks[v]
            if agg == full:
                return list(combo)
    return list(range(g.n))


def _vertex_cover_bruteforce(g: Graph) -> list[int]:
    for size in range(g.n + 1):
        for combo in combinations(range(g.n), size):
            inside = set(combo)
            if all(u in inside or v in inside for u, v in g.edges):
                return list(combo)
    return list(range(g.n))


def verify_reduction(inst: ReductionInstance, source: Graph, k: int,
                     node_limit: int | None = None) -> ReductionReport:
    """Structural, forward, and (oracle) equivalence checks for an instance.

    The forward direction verifies the explicit constructive solution by a
    plain domination test, independent of branch and bound.  Equivalence
    computes the exact domination number of the instance; an exhausted
    search budget yields a report flagged incomplete instead of an error.
    """
    checks: list[CheckResult] = []
    complete = True
    gp = inst.graph

    if inst.kind == "cubic_clawfree_d":
        d = diameter(gp)
        checks.append(CheckResult("claw-free", contains_induced(gp, "claw") is None))
        checks.append(CheckResult("diameter", isinstance(d, int) and d >= 3,
                                  f"diameter={d}"))
        expected = 2 * source.n + k + 1 + (d // 3 if isinstance(d, int) and d >= 4 else 0)
        checks.append(CheckResult("budget-formula", inst.kprime == expected,
                                  f"kprime={inst.kprime} expected={expected}"))
        src_set = _gamma_set_bruteforce(source)
        src_value = len(src_set)
        if src_value <= k:
            sol = cubic_forward_solution(inst, source, src_set)
            ok = len(sol) <= inst.kprime and is_dominating_set(gp, sol)
            checks.append(CheckResult("forward-construction", ok,
                                      f"|D'|={len(sol)} kprime={inst.kprime}"))
        else:
            checks.append(CheckResult("forward-construction", True, "vacuous"))
    elif inst.kind == "vc_k14_diam2":
        checks.append(CheckResult("k14-free", contains_induced(gp, "K14") is None))
        checks.append(CheckResult("diameter", diameter(gp) == 2))
        checks.append(CheckResult("budget-formula", inst.kprime == k,
                                  f"kprime={inst.kprime} expected={k}"))
        cover = _vertex_cover_bruteforce(source)
        src_value = len(cover)
        if src_value <= k:
            sol = vc_forward_solution(inst, cover)
            ok = len(sol) <= inst.kprime and is_dominating_set(gp, sol)
            checks.append(CheckResult("forward-construction", ok))
        else:
            checks.append(CheckResult("forward-construction", True, "vacuous"))
    elif inst.kind == "split_trianglefree_diam2":
        checks.append(CheckResult("triangle-free", contains_induced(gp, "C3") is None))
        checks.append(CheckResult("diameter", diameter(gp) == 2))
        checks.append(CheckResult("budget-formula", inst.kprime == k + 1,
                                  f"kprime={inst.kprime} expected={k + 1}"))
        sources = sorted(
            role["source"]
            for role in inst.provenance.values()
            if role["role"] in ("clique_copy", "stable_copy1")
        )
        work, _ = induced_subgraph(source, sources)
        src_set_local = _gamma_set_bruteforce(work)
        src_set = [sources[v] for v in src_set_local]
        src_value = len(src_set)
        gamma_full = len(_gamma_set_bruteforce(source))
        checks.append(CheckResult(
            "reduction-preserved-gamma", src_value == gamma_full,
            f"reduced={src_value} original={gamma_full}"))
        if src_value <= k:
            sol = split_forward_solution(inst, src_set)
            ok = len(sol) <= inst.kprime and is_dominating_set(gp, sol)
            checks.append(CheckResult("forward-construction", ok))
        else:
            checks.append(CheckResult("forward-construction", True, "vacuous"))
    else:
        raise InputError(f"unknown reduction kind {inst.kind!r}")

    try:
        cert = gamma_exact(gp, node_limit=node_limit)
        lhs = src_value <= k
        rhs = cert.gamma <= inst.kprime
        checks.append(CheckResult(
            "equivalence", lhs == rhs,
            f"source<=k is {lhs}; gamma'={cert.gamma} <= kprime={inst.kprime} is {rhs}"))
    except ResourceLimitError as exc:
        complete = False
        checks.append(CheckResult(
            "equivalence", True,
            f"incomplete: budget exhausted (bounds {exc.best_lower}..{exc.best_upper})"))
    return ReductionReport(kind=inst.kind, checks=checks, complete=complete)
