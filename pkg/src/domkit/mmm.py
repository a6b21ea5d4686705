"""Minimum maximal matching via maximal-stable-set enumeration.

Strategy: every maximal matching leaves an independent set of vertices
uncovered, so some maximal stable set S contains the uncovered vertices of
an optimal solution.  For each maximal stable set S we compute a maximum
matching of the graph minus S, try to match the leftover vertices into S,
and keep the smallest maximal matching assembled this way.  Candidates
whose leftovers cannot be matched into S are repaired through a strictly
growing chain of stable sets.  Exact on every graph whose maximal stable
sets can all be enumerated (in particular 2K2-free graphs, which have at
most n(n-1)/2 of them).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator

from .errors import ContractViolationError, InternalInvariantError, ResourceLimitError
from .graphs import Graph, VertexSet, adjacency_masks, induced_subgraph
from .matching import (
    BipartiteView,
    Matching,
    bipartite_max_matching,
    covers_left,
    hall_violator,
    is_maximal_matching,
    maximum_matching,
)

logger = logging.getLogger(__name__)

DEFAULT_ENUMERATION_CAP = 10**6


def is_stable_set(g: Graph, members) -> bool:
    ms = list(members)
    masks = adjacency_masks(g)
    bits = 0
    for v in ms:
        bits |= 1 << v
    return all(not masks[v] & bits for v in ms)


def is_maximal_stable_set(g: Graph, members) -> bool:
    if not is_stable_set(g, members):
        return False
    masks = adjacency_masks(g)
    bits = 0
    for v in members:
        bits |= 1 << v
    return all(
        bits >> v & 1 or masks[v] & bits for v in range(g.n)
    )


def enumerate_maximal_stable_sets(g: Graph, cap: int = DEFAULT_ENUMERATION_CAP
                                  ) -> Iterator[VertexSet]:
    """Yield every maximal stable set of ``g`` exactly once.

    Maximal-clique enumeration on the complement (pivoting variant), so the
    run time is proportional to the number of sets.  Raises
    :class:`ResourceLimitError` once more than ``cap`` sets appear; for a
    2K2-free input a cap of n(n-1)/2 can never trigger.
    """
    if cap < 1:
        raise ContractViolationError("enumeration cap must be at least 1")
    n = g.n
    full = (1 << n) - 1
    adj = adjacency_masks(g)
    # complement adjacency: non-neighbors excluding self
    cadj = [full & ~adj[v] & ~(1 << v) for v in range(n)]
    emitted = 0

    def bits_of(mask: int) -> Iterator[int]:
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def expand(r: int, p: int, x: int) -> Iterator[int]:
        if not p and not x:
            yield r
            return
        pivot = -1
        pivot_score = -1
        for u in bits_of(p | x):
            score = bin(p & cadj[u]).count("1")
            if score > pivot_score:
                pivot_score = score
                pivot = u
        for v in bits_of(p & ~cadj[pivot]):
            bit = 1 << v
            yield from expand(r | bit, p & cadj[v], x & cadj[v])
            p &= ~bit
            x |= bit

    for mask in expand(0, full, 0):
        emitted += 1
        if emitted > cap:
            raise ResourceLimitError(
                f"more than {cap} maximal stable sets", count=emitted
            )
        yield VertexSet([v for v in range(n) if mask >> v & 1], n)


@dataclass
class StableSetCandidate:
    """Evaluation of one maximal stable set S.

    ``matching`` is a maximum matching of the graph minus S (edges in host
    ids), ``uncovered`` the vertices outside S it misses, and ``size_bound``
    = |matching| + |uncovered| the size of the maximal matching this
    candidate yields when it is fair.  ``cover_matching`` holds the
    uncovered-into-S matching when fair.
    """

    stable_set: VertexSet
    matching: Matching
    uncovered: VertexSet
    size_bound: int
    fair: bool
    cover_matching: Matching | None

    def assembled(self) -> Matching:
        if not self.fair or self.cover_matching is None:
            raise ContractViolationError("only fair candidates assemble a matching")
        m = Matching(self.matching.edges + self.cover_matching.edges, self.matching.host_n)
        if len(m) != self.size_bound:
            raise InternalInvariantError(
                f"assembled matching size {len(m)} != bound {self.size_bound}"
            )
        return m


def _evaluate(g: Graph, s: VertexSet) -> tuple[StableSetCandidate, BipartiteView, Matching]:
    if not is_maximal_stable_set(g, s.members):
        raise ContractViolationError(f"{s!r} is not a maximal stable set")
    rest = s.complement_members()
    sub, remap = induced_subgraph(g, rest)
    mu_local = maximum_matching(sub)
    mu = Matching([(remap[u], remap[v]) for u, v in mu_local.edges], g.n)
    cov = mu.covered()
    uncovered = VertexSet([v for v in rest if v not in cov], g.n)
    bound = len(mu) + len(uncovered)
    # independent recomputation: (n - q)/2 with q = |S| - |uncovered|
    q = len(s) - len(uncovered)
    twice = g.n - q
    if twice % 2 or twice // 2 != bound:
        raise InternalInvariantError(
            f"size-bound identity failed: |mu|+|T|={bound}, (n-q)/2={twice / 2}"
        )
    view = BipartiteView(g, uncovered, s)
    cover = bipartite_max_matching(view)
    fair = covers_left(view, cover)
    cand = StableSetCandidate(
        stable_set=s,
        matching=mu,
        uncovered=uncovered,
        size_bound=bound,
        fair=fair,
        cover_matching=cover if fair else None,
    )
    return cand, view, cover


def evaluate_stable_set(g: Graph, s: VertexSet) -> StableSetCandidate:
    """Evaluate one maximal stable set; see :class:`StableSetCandidate`."""
    cand, _, _ = _evaluate(g, s)
    return cand


def improve_stable_set(g: Graph, cand: StableSetCandidate,
                       deficient: VertexSet) -> VertexSet:
    """Grow an unfair candidate's stable set strictly.

    ``deficient`` is a Hall violator among the uncovered vertices.  The new
    stable set swaps the violator in for its neighbors inside S, then packs
    in matched vertices whose S-neighbors all left and that avoid the
    violator.  Guaranteed strictly larger than S.
    """
    if cand.fair:
        raise ContractViolationError("candidate is fair; nothing to improve")
    s_set = set(cand.stable_set)
    t_set = set(deficient)
    if not t_set <= set(cand.uncovered):
        raise ContractViolationError("violator is not a subset of the uncovered set")
    displaced = set()
    for v in t_set:
        displaced.update(w for w in g.neighbors(v) if w in s_set)
    eligible = []
    for w in sorted(cand.matching.covered()):
        nb = set(g.neighbors(w))
        if nb & t_set:
            continue
        if (nb & s_set) <= displaced:
            eligible.append(w)
    packed: list[int] = []
    packed_bits = 0
    masks = adjacency_masks(g)
    for w in eligible:  # ascending id, greedy maximal among eligible
        if not masks[w] & packed_bits:
            packed.append(w)
            packed_bits |= 1 << w
    new_members = (s_set - displaced) | t_set | set(packed)
    if not is_stable_set(g, new_members):
        raise InternalInvariantError("improved set is not stable")
    if not is_maximal_stable_set(g, new_members):
        before = set(new_members)
        bits = 0
        for v in new_members:
            bits |= 1 << v
        for v in range(g.n):
            if not bits >> v & 1 and not masks[v] & bits:
                new_members.add(v)
                bits |= 1 << v
        logger.warning(
            "improved stable set needed a maximality repair: added %s",
            sorted(set(new_members) - before),
        )
    if len(new_members) <= len(s_set):
        raise InternalInvariantError(
            f"improvement did not grow the stable set: {len(s_set)} -> {len(new_members)}"
        )
    return VertexSet(new_members, g.n)


@dataclass
class ChainStep:
    """One improvement step: sizes and bounds before and after."""

    size_before: int
    size_after: int
    bound_before: int
    bound_after: int


@dataclass
class MmmRun:
    """Full trace of a minimum-maximal-matching computation."""

    best: Matching
    candidates: list[StableSetCandidate]
    chain_steps: list[ChainStep]
    stable_sets_enumerated: int


def run_mmm(g: Graph, cap: int | None = None,
            assume_2k2_free: bool = False) -> MmmRun:
    """Compute a minimum maximal matching, returning the full trace."""
    if cap is None:
        cap = g.n * (g.n - 1) // 2 + 1 if assume_2k2_free else DEFAULT_ENUMERATION_CAP
        cap = max(cap, 1)
    best: Matching | None = None
    candidates: list[StableSetCandidate] = []
    chain_steps: list[ChainStep] = []
    enumerated = 0
    for s in enumerate_maximal_stable_sets(g, cap):
        enumerated += 1
        cand, view, cover = _evaluate(g, s)
        candidates.append(cand)
        while not cand.fair:
            violator = hall_violator(view, cover)
            if violator is None:
                raise InternalInvariantError("unfair candidate has no Hall violator")
            grown = improve_stable_set(g, cand, violator)
            nxt, view, cover = _evaluate(g, grown)
            candidates.append(nxt)
            step = ChainStep(
                size_before=len(cand.stable_set),
                size_after=len(nxt.stable_set),
                bound_before=cand.size_bound,
                bound_after=nxt.size_bound,
            )
            chain_steps.append(step)
            if step.bound_after >= step.bound_before:
                raise InternalInvariantError(
                    f"improvement chain did not shrink the bound: "
                    f"{step.bound_before} -> {step.bound_after}"
                )
            cand = nxt
        m = cand.assembled()
        if best is None or (len(m), m.edges) < (len(best), best.edges):
            best = m
    if best is None:
        raise InternalInvariantError("no maximal stable set enumerated")
    if not is_maximal_matching(g, best):
        raise InternalInvariantError("result is not a maximal matching")
    return MmmRun(
        best=best,
        candidates=candidates,
        chain_steps=chain_steps,
        stable_sets_enumerated=enumerated,
    )


def minimum_maximal_matching(g: Graph, cap: int | None = None,
                             assume_2k2_free: bool = False) -> Matching:
    """Smallest maximal matching; exact when all maximal stable sets fit ``cap``."""
    return run_mmm(g, cap=cap, assume_2k2_free=assume_2k2_free).best
