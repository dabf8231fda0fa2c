"""Loopless multigraph core with stable edge identities.

Every edge is identified by its position in the edge list (its EdgeId), and
every derived view (induced subgraph, block subgraph, contraction) carries an
explicit mapping back to the parent's EdgeIds.  Cut certificates, colorings
and reports all speak in terms of these ids, so the mappings are load-bearing,
not a convenience.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import ContractionError, GraphParseError, GraphStructureError


class Graph:
    """Immutable undirected multigraph on vertices 0..vertex_count-1.

    Parallel edges are permitted, self-loops are not.  EdgeId i refers to
    ``edges[i]``.
    """

    __slots__ = ("vertex_count", "edges", "adj")

    def __init__(self, vertex_count: int, edges):
        if vertex_count < 0:
            raise GraphStructureError("vertex_count must be non-negative")
        edges = tuple((int(u), int(v)) for u, v in edges)
        adj: list[list[tuple[int, int]]] = [[] for _ in range(vertex_count)]
        for eid, (u, v) in enumerate(edges):
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphStructureError(
                    f"edge {eid} endpoint out of range: ({u}, {v})"
                )
            if u == v:
                raise GraphStructureError(f"edge {eid} is a self-loop at {u}")
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "adj", tuple(tuple(nb) for nb in adj))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        # __slots__ plus the immutability guard defeat default pickling
        return (Graph, (self.vertex_count, self.edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        if self.vertex_count == 0:
            return 0
        return max(len(nb) for nb in self.adj)

    def has_parallel_edges(self) -> bool:
        seen = set()
        for u, v in self.edges:
            key = (u, v) if u < v else (v, u)
            if key in seen:
                return True
            seen.add(key)
        return False

    def endpoints(self, eid: int) -> tuple[int, int]:
        return self.edges[eid]

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.vertex_count == other.vertex_count
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.vertex_count, self.edges))

    def __repr__(self):
        return f"Graph(vertex_count={self.vertex_count}, edges={list(self.edges)})"


# ---------------------------------------------------------------------------
# text format


def parse_graph(text: str) -> Graph:
    """Parse the plain edge-list format.

    First significant line is ``n m``, followed by exactly m lines ``u v``
    (0-based endpoints).  Lines that are blank or start with ``#`` are
    skipped.  EdgeIds are assigned in file order.
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"expected two integers, got {raw!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"expected two integers, got {raw!r}", lineno)
        if header is None:
            if a < 0 or b < 0:
                raise GraphParseError("header counts must be non-negative", lineno)
            header = (a, b)
            continue
        n, m = header
        if len(edges) >= m:
            raise GraphParseError(
                f"more than the declared {m} edge lines", lineno
            )
        if not (0 <= a < n and 0 <= b < n):
            raise GraphParseError(
                f"endpoint out of range for {n} vertices: {a} {b}", lineno
            )
        if a == b:
            raise GraphParseError(f"self-loop at vertex {a} not allowed", lineno)
        edges.append((a, b))
    if header is None:
        raise GraphParseError("missing 'n m' header line")
    n, m = header
    if len(edges) != m:
        raise GraphParseError(f"declared {m} edges but found {len(edges)}")
    return Graph(n, edges)


def serialize_graph(g: Graph) -> str:
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# connectivity structure


def components(g: Graph) -> tuple[frozenset[int], ...]:
    """Connected components as vertex sets, ordered by smallest member."""
    seen = [False] * g.vertex_count
    out = []
    for start in range(g.vertex_count):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w, _ in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(frozenset(comp))
    return tuple(out)


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


@dataclass(frozen=True)
class SubgraphView:
    """An induced subgraph plus the maps tying it back to its parent."""

    graph: Graph
    vertices: tuple[int, ...]  # local id -> parent vertex
    vertex_map: dict  # parent vertex -> local id
    edge_map: tuple[int, ...]  # local EdgeId -> parent EdgeId


def induced_subgraph(g: Graph, vertices) -> SubgraphView:
    verts = tuple(sorted(set(vertices)))
    if any(not (0 <= v < g.vertex_count) for v in verts):
        raise GraphStructureError("induced_subgraph: vertex out of range")
    local = {v: i for i, v in enumerate(verts)}
    edges = []
    emap = []
    for eid, (u, v) in enumerate(g.edges):
        if u in local and v in local:
            edges.append((local[u], local[v]))
            emap.append(eid)
    return SubgraphView(Graph(len(verts), edges), verts, local, tuple(emap))


@dataclass(frozen=True)
class Block:
    """One block (maximal 2-connected piece or bridge) of a graph."""

    edge_ids: tuple[int, ...]  # parent EdgeIds, sorted
    vertices: frozenset[int]
    subgraph: SubgraphView


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Block, ...]
    cut_vertices: frozenset[int]
    # bipartite block tree as (block index, cut vertex) incidences
    tree_edges: tuple[tuple[int, int], ...]


def blocks(g: Graph) -> BlockDecomposition:
    """Block decomposition of a connected graph (iterative Tarjan).

    Raises GraphStructureError on a disconnected input.
    """
    if g.vertex_count == 0:
        raise GraphStructureError("block decomposition needs at least one vertex")
    if not is_connected(g):
        raise GraphStructureError("block decomposition requires a connected graph")

    n = g.vertex_count
    disc = [-1] * n
    low = [0] * n
    edge_stack: list[int] = []
    block_edges: list[list[int]] = []
    cut: set[int] = set()

    root = 0
    timer = 0
    disc[root] = low[root] = timer
    timer += 1
    root_children = 0
    # frame: [vertex, incoming EdgeId, adjacency iterator]
    stack = [(root, -1, iter(g.adj[root]))]
    while stack:
        v, pe, it = stack[-1]
        moved = False
        for w, eid in it:
            if eid == pe:
                continue  # skip only the one incoming edge; parallels are back edges
            if disc[w] == -1:
                edge_stack.append(eid)
                disc[w] = low[w] = timer
                timer += 1
                if v == root:
                    root_children += 1
                stack.append((w, eid, iter(g.adj[w])))
                moved = True
                break
            if disc[w] < disc[v]:
                edge_stack.append(eid)
                if disc[w] < low[v]:
                    low[v] = disc[w]
            # disc[w] > disc[v]: other end of a back edge already on the stack
        if moved:
            continue
        stack.pop()
        if not stack:
            break
        parent = stack[-1][0]
        if low[v] < low[parent]:
            low[parent] = low[v]
        if low[v] >= disc[parent]:
            # pop the block whose boundary is the tree edge into v
            blk = []
            while True:
                top = edge_stack.pop()
                blk.append(top)
                if top == pe:
                    break
            block_edges.append(blk)
            if parent != root:
                cut.add(parent)
    if root_children >= 2:
        cut.add(root)

    block_objs = []
    tree = []
    for idx, eids in enumerate(block_edges):
        eids_sorted = tuple(sorted(eids))
        verts = set()
        for eid in eids_sorted:
            u, v = g.edges[eid]
            verts.add(u)
            verts.add(v)
        view = induced_subgraph(g, verts)
        # an induced subgraph of the block's vertex set could pick up edges
        # from other blocks only at cut vertices; blocks share no edge, and
        # two vertices of one block joined by an edge put that edge in the
        # block, so the induced edge set equals the block's edge set.
        block_objs.append(Block(eids_sorted, frozenset(verts), view))
        for cv in verts & cut:
            tree.append((idx, cv))
    return BlockDecomposition(tuple(block_objs), frozenset(cut), tuple(tree))


# ---------------------------------------------------------------------------
# contraction


@dataclass(frozen=True)
class ContractionResult:
    """Result of contracting a vertex set X into a single vertex.

    Edges inside X disappear, edges crossing the boundary become (possibly
    parallel) edges at ``merged_vertex``.  ``edge_map[new_eid]`` is the
    parent EdgeId, ``vertex_map[old]`` the new vertex id.
    """

    graph: Graph
    edge_map: tuple[int, ...]
    vertex_map: dict
    merged_vertex: int


def contract(g: Graph, x) -> ContractionResult:
    xs = frozenset(x)
    if not xs:
        raise ContractionError("cannot contract the empty set")
    if any(not (0 <= v < g.vertex_count) for v in xs):
        raise ContractionError("contract: vertex out of range")
    if len(xs) >= g.vertex_count:
        raise ContractionError("cannot contract every vertex")
    kept = [v for v in range(g.vertex_count) if v not in xs]
    new_id = {v: i for i, v in enumerate(kept)}
    merged = len(kept)
    for v in xs:
        new_id[v] = merged
    edges = []
    emap = []
    for eid, (u, v) in enumerate(g.edges):
        if u in xs and v in xs:
            continue  # would be a loop, dropped
        edges.append((new_id[u], new_id[v]))
        emap.append(eid)
    return ContractionResult(
        Graph(merged + 1, edges), tuple(emap), new_id, merged
    )


# ---------------------------------------------------------------------------
# structural predicates


def is_tree(g: Graph) -> bool:
    return (
        g.vertex_count >= 1
        and g.edge_count == g.vertex_count - 1
        and is_connected(g)
    )


def _block_is_cycle(sub: Graph) -> bool:
    # a cycle block: as many edges as vertices, every vertex of degree 2
    # (a pair of parallel edges counts: it is a 2-cycle)
    return (
        sub.vertex_count >= 2
        and sub.edge_count == sub.vertex_count
        and all(sub.degree(v) == 2 for v in range(sub.vertex_count))
    )


def is_cactus_with_cycle(g: Graph) -> bool:
    """Connected, every block a single edge or a cycle, at least one cycle."""
    if g.vertex_count == 0 or not is_connected(g):
        return False
    has_cycle = False
    for blk in blocks(g).blocks:
        sub = blk.subgraph.graph
        if sub.edge_count == 1:
            continue
        if _block_is_cycle(sub):
            has_cycle = True
            continue
        return False
    return has_cycle


# ---------------------------------------------------------------------------
# maximum-degree core and the sufficient Class-1 test


def max_degree_core(g: Graph) -> SubgraphView:
    """Subgraph induced by the vertices of maximum degree."""
    d = g.max_degree()
    verts = [v for v in range(g.vertex_count) if g.degree(v) == d]
    return induced_subgraph(g, verts)


def is_class1_by_core(g: Graph) -> bool:
    """Sufficient test for chromatic index == max degree.

    True when every component of the max-degree core is a tree or unicyclic
    and the core is not a disjoint union of cycles.  One-sided: False means
    "unknown", never "Class 2".
    """
    core = max_degree_core(g).graph
    comps = components(core)
    all_cycles = len(comps) > 0
    for comp in comps:
        ec = sum(1 for u, v in core.edges if u in comp)
        if ec > len(comp):
            return False  # component has two independent cycles
        if not (len(comp) >= 3 and ec == len(comp)
                and all(core.degree(v) == 2 for v in comp)):
            all_cycles = False
    if all_cycles:
        return False
    return True


# ---------------------------------------------------------------------------
# DOT export

_DOT_PALETTE = (
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628",
    "#f781bf", "#999999", "#66c2a5", "#fc8d62", "#8da0cb", "#e78ac3",
)


def export_dot(g: Graph, coloring=None, vertex_labels=None, color_labels=None) -> str:
    """Render the graph as Graphviz DOT, optionally labelling edge colors.

    ``coloring`` is an EdgeColoring (or anything indexable by EdgeId);
    ``vertex_labels``/``color_labels`` replace raw ids in labels.
    """
    if coloring is not None and len(coloring) != g.edge_count:
        from .errors import ColoringError

        raise ColoringError(
            f"coloring covers {len(coloring)} edges, graph has {g.edge_count}"
        )
    out = ["graph srdkit {"]
    for v in range(g.vertex_count):
        label = vertex_labels[v] if vertex_labels else str(v)
        out.append(f'  {v} [label="{label}"];')
    for eid, (u, v) in enumerate(g.edges):
        if coloring is None:
            out.append(f"  {u} -- {v};")
        else:
            c = coloring[eid]
            label = color_labels[c] if color_labels else str(c)
            paint = _DOT_PALETTE[(c - 1) % len(_DOT_PALETTE)]
            out.append(f'  {u} -- {v} [label="{label}", color="{paint}"];')
    out.append("}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# standard constructions used throughout the tests and the CLI


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphStructureError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_multipartite_graph(parts) -> Graph:
    """Complete multipartite graph; vertices of part i precede part i+1."""
    sizes = list(parts)
    if not sizes or any(p <= 0 for p in sizes):
        raise GraphStructureError("part sizes must be positive")
    offsets = []
    total = 0
    for p in sizes:
        offsets.append(total)
        total += p
    part_of = []
    for i, p in enumerate(sizes):
        part_of.extend([i] * p)
    edges = [
        (u, v)
        for u in range(total)
        for v in range(u + 1, total)
        if part_of[u] != part_of[v]
    ]
    return Graph(total, edges)


def grid_vertex(m: int, n: int, i: int, j: int) -> int:
    """Vertex id of row i, column j (0-based) in grid_graph(m, n)."""
    return i * n + j


def grid_graph(m: int, n: int) -> Graph:
    """m-by-n grid: horizontal edges first (row-major), then verticals."""
    if m < 1 or n < 1:
        raise GraphStructureError("grid dimensions must be positive")
    edges = []
    for i in range(m):
        for j in range(n - 1):
            edges.append((grid_vertex(m, n, i, j), grid_vertex(m, n, i, j + 1)))
    for i in range(m - 1):
        for j in range(n):
            edges.append((grid_vertex(m, n, i, j), grid_vertex(m, n, i + 1, j)))
    return Graph(m * n, edges)


def petersen_graph() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph(10, edges)
