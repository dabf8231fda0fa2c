"""Decide whether an edge-colored graph has rainbow (minimum) cuts for
every vertex pair.

Two search strategies per pair: enumerate all minimum cuts and test each
for rainbowness while their number stays below a threshold, otherwise a
color-class DFS that picks at most one edge per color along live shortest
paths.  The DFS visits each rainbow edge subset at most once, so with k
colors and classes of sizes s_1..s_k it explores at most
prod(s_i + 1) <= sum_{l<=k} C(m, l) states — polynomial for fixed k.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .colorings import EdgeColoring, check_coloring_fits
from .connectivity import (
    CutCertificate,
    _check_pair,
    enumerate_min_cuts,
    local_edge_connectivity,
)
from .errors import BudgetExceededError, GraphStructureError
from .graph import Graph, is_connected


@dataclass
class SearchStats:
    """Mutable counters a caller can pass in to observe search effort."""

    nodes: int = 0  # DFS states visited
    enumerated: int = 0  # minimum cuts listed by the enumeration phase


@dataclass(frozen=True)
class VerificationReport:
    verdict: bool
    witnesses: dict = field(default_factory=dict)  # (u, v) -> CutCertificate
    failing_pair: tuple | None = None


DEFAULT_THRESHOLD = 10_000


def is_rainbow(c: EdgeColoring, edge_set) -> bool:
    """True when no color repeats on the given edges."""
    seen = set()
    for eid in edge_set:
        col = c[eid]
        if col in seen:
            return False
        seen.add(col)
    return True


def _shortest_path_edges(g: Graph, u: int, v: int, removed) -> list | None:
    """Edge ids of one BFS-shortest u-v path avoiding ``removed``."""
    prev = {u: (-1, -1)}
    queue = [u]
    while queue:
        nxt = []
        for x in queue:
            for w, eid in g.adj[x]:
                if eid in removed or w in prev:
                    continue
                prev[w] = (x, eid)
                if w == v:
                    path = []
                    while w != u:
                        x0, e0 = prev[w]
                        path.append(e0)
                        w = x0
                    path.reverse()
                    return path
                nxt.append(w)
        queue = nxt
    return None


def _dfs_rainbow_min_cut(g, c, u, v, lam, stats, node_budget=None):
    """Complete search for a rainbow u-v cut of size exactly ``lam``.

    Branches over the edges of a live shortest path whose colors are still
    unused; exclusion sets keep the visited rainbow subsets distinct.
    Prunes when the residual connectivity no longer matches the remaining
    budget (a completion would overshoot the target size).
    """

    def rec(chosen, excluded, used_colors):
        stats.nodes += 1
        if node_budget is not None and stats.nodes > node_budget:
            raise BudgetExceededError(
                f"rainbow min-cut search exceeded {node_budget} states"
            )
        residual = local_edge_connectivity(g, u, v, removed=chosen)
        if residual == 0:
            assert len(chosen) == lam
            return frozenset(chosen)
        if residual != lam - len(chosen):
            return None
        path = _shortest_path_edges(g, u, v, chosen)
        branch = [e for e in path if e not in excluded and c[e] not in used_colors]
        grown = set(excluded)
        for e in branch:
            hit = rec(chosen | {e}, frozenset(grown), used_colors | {c[e]})
            if hit is not None:
                return hit
            grown.add(e)
        return None

    return rec(frozenset(), frozenset(), frozenset())


def _dfs_rainbow_cut(g, c, u, v, stats):
    """Complete search for a rainbow u-v cut of any size.

    Any rainbow cut contains an inclusion-minimal one, and every edge of a
    minimal cut lies on a live path, so path branching stays complete.
    """
    palette = len(c.distinct_colors())

    def rec(chosen, excluded, used_colors):
        stats.nodes += 1
        residual = local_edge_connectivity(g, u, v, removed=chosen)
        if residual == 0:
            return frozenset(chosen)
        if residual > palette - len(used_colors):
            return None
        path = _shortest_path_edges(g, u, v, chosen)
        branch = [e for e in path if e not in excluded and c[e] not in used_colors]
        grown = set(excluded)
        for e in branch:
            hit = rec(chosen | {e}, frozenset(grown), used_colors | {c[e]})
            if hit is not None:
                return hit
            grown.add(e)
        return None

    return rec(frozenset(), frozenset(), frozenset())


def find_rainbow_min_cut(
    g: Graph,
    c: EdgeColoring,
    u: int,
    v: int,
    threshold: int = DEFAULT_THRESHOLD,
    stats: SearchStats | None = None,
    node_budget: int | None = None,
) -> CutCertificate | None:
    """A rainbow u-v cut of size exactly λ(u, v), or None after a complete
    search.  ``threshold`` caps the enumeration phase; beyond it (or when
    it is 0) the color-class DFS takes over.  ``node_budget`` bounds the
    DFS states, raising BudgetExceededError instead of answering."""
    check_coloring_fits(g, c)
    _check_pair(g, u, v)
    if stats is None:
        stats = SearchStats()
    lam = local_edge_connectivity(g, u, v)
    if lam == 0:
        raise GraphStructureError(f"vertices {u} and {v} are disconnected")

    if threshold > 0:
        certs = enumerate_min_cuts(g, u, v, limit=threshold + 1)
        if len(certs) <= threshold:
            stats.enumerated += len(certs)
            for cert in certs:
                if is_rainbow(c, cert.cut):
                    return cert
            return None

    cut = _dfs_rainbow_min_cut(g, c, u, v, lam, stats, node_budget=node_budget)
    if cut is None:
        return None
    return CutCertificate(pair=(u, v), cut=cut, value=lam)


def find_rainbow_cut(
    g: Graph,
    c: EdgeColoring,
    u: int,
    v: int,
    stats: SearchStats | None = None,
) -> frozenset | None:
    """A rainbow u-v cut of any size, or None after a complete search."""
    check_coloring_fits(g, c)
    _check_pair(g, u, v)
    if stats is None:
        stats = SearchStats()
    if local_edge_connectivity(g, u, v) == 0:
        raise GraphStructureError(f"vertices {u} and {v} are disconnected")
    return _dfs_rainbow_cut(g, c, u, v, stats)


def is_srd_coloring(
    g: Graph,
    c: EdgeColoring,
    threshold: int = DEFAULT_THRESHOLD,
    stats: SearchStats | None = None,
) -> VerificationReport:
    """Does every vertex pair have a rainbow minimum cut?

    Pairs are scanned in lexicographic order and the first failing pair is
    reported; on success every pair carries its witness certificate.
    """
    check_coloring_fits(g, c)
    if not is_connected(g):
        raise GraphStructureError("graph must be connected")
    witnesses = {}
    for u in range(g.vertex_count):
        for v in range(u + 1, g.vertex_count):
            cert = find_rainbow_min_cut(g, c, u, v, threshold=threshold, stats=stats)
            if cert is None:
                return VerificationReport(
                    verdict=False, witnesses=witnesses, failing_pair=(u, v)
                )
            witnesses[(u, v)] = cert
    return VerificationReport(verdict=True, witnesses=witnesses)


def is_rd_coloring(
    g: Graph,
    c: EdgeColoring,
    stats: SearchStats | None = None,
) -> VerificationReport:
    """Does every vertex pair have a rainbow cut of some size?"""
    check_coloring_fits(g, c)
    if not is_connected(g):
        raise GraphStructureError("graph must be connected")
    witnesses = {}
    for u in range(g.vertex_count):
        for v in range(u + 1, g.vertex_count):
            cut = find_rainbow_cut(g, c, u, v, stats=stats)
            if cut is None:
                return VerificationReport(
                    verdict=False, witnesses=witnesses, failing_pair=(u, v)
                )
            witnesses[(u, v)] = CutCertificate(pair=(u, v), cut=cut, value=len(cut))
    return VerificationReport(verdict=True, witnesses=witnesses)
