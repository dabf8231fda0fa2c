"""Independent brute-force oracles used to pin expected values.

Everything here works from raw (vertex_count, edge list, color tuple) data
and uses only subset enumeration plus union-find, so it shares no logic with
the package under test.
"""

from itertools import combinations


def _component_labels(n, edges, excluded=frozenset()):
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for eid, (u, v) in enumerate(edges):
        if eid in excluded:
            continue
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    return tuple(find(v) for v in range(n))


def oracle_separates(n, edges, cut, u, v):
    labels = _component_labels(n, edges, frozenset(cut))
    return labels[u] != labels[v]


def oracle_component_count(n, edges, excluded=frozenset()):
    return len(set(_component_labels(n, edges, excluded)))


def oracle_lambda(n, edges, u, v):
    """Minimum size of an edge subset separating u from v."""
    m = len(edges)
    for size in range(m + 1):
        for cut in combinations(range(m), size):
            if oracle_separates(n, edges, cut, u, v):
                return size
    raise AssertionError("removing all edges must separate distinct vertices")


def oracle_all_min_cuts(n, edges, u, v):
    """(lambda, sorted list of all minimum separating EdgeId sets)."""
    lam = oracle_lambda(n, edges, u, v)
    cuts = [
        frozenset(cut)
        for cut in combinations(range(len(edges)), lam)
        if oracle_separates(n, edges, cut, u, v)
    ]
    return lam, sorted(cuts, key=sorted)


def oracle_cut_vertices(n, edges):
    base = oracle_component_count(n, edges)
    out = set()
    for v in range(n):
        kept = [e for e in edges if v not in e]
        # v removed: count components among the other vertices
        labels = _component_labels(n, kept)
        rest = {labels[w] for w in range(n) if w != v}
        if len(rest) > base:
            out.add(v)
    return out


def _rainbow(colors, cut):
    seen = set()
    for eid in cut:
        c = colors[eid]
        if c in seen:
            return False
        seen.add(c)
    return True


def oracle_is_srd(n, edges, colors):
    """Every pair has a rainbow separating set of size exactly lambda(u,v)."""
    m = len(edges)
    for u in range(n):
        for v in range(u + 1, n):
            lam = oracle_lambda(n, edges, u, v)
            ok = any(
                _rainbow(colors, cut) and oracle_separates(n, edges, cut, u, v)
                for cut in combinations(range(m), lam)
            )
            if not ok:
                return False
    return True


def oracle_is_rd(n, edges, colors):
    """Every pair has a rainbow separating set of some size."""
    m = len(edges)
    all_subsets = []
    for size in range(m + 1):
        all_subsets.extend(combinations(range(m), size))
    for u in range(n):
        for v in range(u + 1, n):
            ok = any(
                _rainbow(colors, cut) and oracle_separates(n, edges, cut, u, v)
                for cut in all_subsets
            )
            if not ok:
                return False
    return True


class FastSrdOracle:
    """Subset-table oracle for one graph, reusable across many colorings.

    Precomputes, per vertex pair, every minimum separating edge mask, so a
    coloring check is just "is any of these masks rainbow".
    """

    def __init__(self, n, edges):
        assert len(edges) <= 16
        self.n = n
        self.edges = list(edges)
        m = len(edges)
        self.m = m
        comp = []
        for mask in range(1 << m):
            comp.append(_component_labels(n, edges, _mask_set(mask)))
        self.pair_min_cut_masks = {}
        self.pair_lambda = {}
        for u in range(n):
            for v in range(u + 1, n):
                best = None
                masks = []
                for mask in range(1 << m):
                    if comp[mask][u] != comp[mask][v]:
                        size = bin(mask).count("1")
                        if best is None or size < best:
                            best = size
                            masks = [mask]
                        elif size == best:
                            masks.append(mask)
                self.pair_lambda[(u, v)] = best
                self.pair_min_cut_masks[(u, v)] = masks

    def is_srd(self, colors):
        for pair, masks in self.pair_min_cut_masks.items():
            if not any(_rainbow(colors, _mask_set(mk)) for mk in masks):
                return False
        return True


def _mask_set(mask):
    out = set()
    i = 0
    while mask:
        if mask & 1:
            out.add(i)
        mask >>= 1
        i += 1
    return out


def all_labeled_graphs(n, connected_only=True):
    """Every labeled simple graph on n vertices as (n, edge list)."""
    possible = [(i, j) for i in range(n) for j in range(i + 1, n)]
    out = []
    for mask in range(1 << len(possible)):
        edges = [possible[i] for i in range(len(possible)) if mask >> i & 1]
        if connected_only and oracle_component_count(n, edges) != 1:
            continue
        out.append((n, edges))
    return out
