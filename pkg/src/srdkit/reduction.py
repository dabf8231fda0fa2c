"""3-SAT instances as rainbow-min-cut questions.

For a 3-CNF formula the builder emits an edge-colored graph with
terminals s and t whose minimum s-t cuts have size 6m (m clauses), such
that a *rainbow* minimum s-t cut exists exactly when the formula is
satisfiable.  Each variable occurrence contributes a two-path gadget
whose four edges share one private color (so a rainbow cut can block only
one side: the chosen truth value), and each clause contributes three
entry/exit paths whose exit edges share just two colors, so at most two
of the three literals can be false.  A large uniformly-colored clique
pads the t side to pin the minimum cut value.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .colorings import EdgeColoring
from .connectivity import local_edge_connectivity
from .errors import BudgetExceededError, ExtractionError, ReductionError
from .graph import Graph
from .verifier import find_rainbow_min_cut, is_rainbow

DEFAULT_NODE_BUDGET = 2_000_000


@dataclass(frozen=True)
class CnfFormula:
    """A 3-CNF formula: clauses of exactly three signed 1-based variable
    indexes (DIMACS convention, -2 means "not x2")."""

    variable_count: int
    clauses: tuple

    def __post_init__(self):
        if self.variable_count < 1:
            raise ReductionError("formula needs at least one variable")
        if not self.clauses:
            raise ReductionError("formula needs at least one clause")
        for clause in self.clauses:
            if len(clause) != 3:
                raise ReductionError(f"clause {clause} does not have 3 literals")
            for lit in clause:
                if lit == 0 or abs(lit) > self.variable_count:
                    raise ReductionError(f"literal {lit} out of range in {clause}")

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def occurrences(self) -> tuple:
        """How often each variable appears, counted per literal slot."""
        counts = [0] * self.variable_count
        for clause in self.clauses:
            for lit in clause:
                counts[abs(lit) - 1] += 1
        return tuple(counts)

    def evaluate(self, assignment) -> bool:
        """True when every clause has a satisfied literal; assignment[j-1]
        is the value of variable j."""
        return all(
            any(assignment[abs(lit) - 1] == (lit > 0) for lit in clause)
            for clause in self.clauses
        )


def parse_dimacs_cnf(text: str) -> CnfFormula:
    """Standard DIMACS CNF restricted to 3-literal clauses."""
    header = None
    tokens = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if header is not None:
                raise ReductionError("duplicate DIMACS header")
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ReductionError(f"malformed header: {line!r}")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise ReductionError(f"malformed header: {line!r}") from None
            continue
        tokens.extend(line.split())
    if header is None:
        raise ReductionError("missing 'p cnf' header")
    n, m = header

    clauses = []
    current = []
    for tok in tokens:
        try:
            lit = int(tok)
        except ValueError:
            raise ReductionError(f"non-integer token {tok!r}") from None
        if lit == 0:
            if len(current) != 3:
                raise ReductionError(
                    f"clause {tuple(current)} has {len(current)} literals, need 3"
                )
            clauses.append(tuple(current))
            current = []
        else:
            current.append(lit)
    if current:
        raise ReductionError("trailing literals without a terminating 0")
    if len(clauses) != m:
        raise ReductionError(f"header promises {m} clauses, found {len(clauses)}")
    formula = CnfFormula(n, tuple(clauses))
    return formula


@dataclass(frozen=True)
class ReductionInstance:
    graph: Graph
    coloring: EdgeColoring
    s: int
    t: int
    m: int
    vertex_roles: dict  # vertex id -> "s" | "t" | "x[j,b]" | "c[i,k]" | "p[j,l]" | "q[j,l]" | "y[a]"
    color_roles: dict  # color -> "r0[j,l]" | "r[i,k]" | "r_0"
    formula: CnfFormula


class _Layout:
    """Deterministic id assignment shared by the builder and the helpers
    that must name specific gadget edges afterwards."""

    def __init__(self, phi: CnfFormula):
        n, m = phi.variable_count, phi.num_clauses
        ell = phi.occurrences()
        for j, count in enumerate(ell, start=1):
            if count == 0:
                raise ReductionError(
                    f"variable x{j} never occurs; its gadget would be degenerate"
                )
        self.n, self.m, self.ell = n, m, ell

        # occurrence slots: clause i, position k -> (variable j, positive, l)
        seen = [0] * (n + 1)
        self.slots = []
        for clause in phi.clauses:
            row = []
            for lit in clause:
                j = abs(lit)
                seen[j] += 1
                row.append((j, lit > 0, seen[j]))
            self.slots.append(tuple(row))

        self.s, self.t = 0, 1
        self.vertex_roles = {0: "s", 1: "t"}
        nxt = 2

        def new_vertex(role):
            nonlocal nxt
            self.vertex_roles[nxt] = role
            nxt += 1
            return nxt - 1

        self.x = {}
        for j in range(1, n + 1):
            for b in (0, 1):
                self.x[(j, b)] = new_vertex(f"x[{j},{b}]")
        self.c = {}
        for i in range(1, m + 1):
            for k in range(4):
                self.c[(i, k)] = new_vertex(f"c[{i},{k}]")
        self.p, self.q = {}, {}
        for j in range(1, n + 1):
            for l in range(1, ell[j - 1] + 1):
                self.p[(j, l)] = new_vertex(f"p[{j},{l}]")
                self.q[(j, l)] = new_vertex(f"q[{j},{l}]")
        self.y = {}
        for a in range(1, 5 * m + 2):
            self.y[a] = new_vertex(f"y[{a}]")
        self.vertex_count = nxt

        self.color_roles = {}
        col = 0

        def new_color(role):
            nonlocal col
            col += 1
            self.color_roles[col] = role
            return col

        self.r0 = {
            (j, l): new_color(f"r0[{j},{l}]")
            for j in range(1, n + 1)
            for l in range(1, ell[j - 1] + 1)
        }
        self.r = {}
        for i in range(1, m + 1):
            for k in (1, 2, 3):
                self.r[(i, k)] = new_color(f"r[{i},{k}]")
        for k in (4, 5):
            for i in range(1, m + 1):
                self.r[(i, k)] = new_color(f"r[{i},{k}]")
        self.plain = new_color("r_0")

        edges, colors = [], []

        def add(a, b, color):
            edges.append((a, b))
            colors.append(color)
            return len(edges) - 1

        # variable gadgets: both s-x paths of every occurrence share one color
        self.sp, self.px, self.sq, self.qx = {}, {}, {}, {}
        for j in range(1, n + 1):
            for l in range(1, ell[j - 1] + 1):
                shade = self.r0[(j, l)]
                self.sp[(j, l)] = add(0, self.p[(j, l)], shade)
                self.px[(j, l)] = add(self.p[(j, l)], self.x[(j, 0)], shade)
                self.sq[(j, l)] = add(0, self.q[(j, l)], shade)
                self.qx[(j, l)] = add(self.q[(j, l)], self.x[(j, 1)], shade)

        # clause gadgets: entry into the hub from the literal's false-side
        # vertex, satellite path back to the true-side vertex
        self.entry, self.middle, self.exit = {}, {}, {}
        for i, row in enumerate(self.slots, start=1):
            hub = self.c[(i, 0)]
            for k, (j, positive, _l) in enumerate(row, start=1):
                near = self.x[(j, 0)] if positive else self.x[(j, 1)]
                far = self.x[(j, 1)] if positive else self.x[(j, 0)]
                self.entry[(i, k)] = add(near, hub, self.r[(i, k)])
                self.middle[(i, k)] = add(hub, self.c[(i, k)], self.r[(i, 5)])
                self.exit[(i, k)] = add(self.c[(i, k)], far, self.r[(i, 4)])

        # t-side clique on the hubs, the padding vertices and t itself
        members = (
            [self.c[(i, 0)] for i in range(1, m + 1)]
            + [self.y[a] for a in range(1, 5 * m + 2)]
            + [1]
        )
        for a, b in itertools.combinations(members, 2):
            add(a, b, self.plain)

        self.graph = Graph(self.vertex_count, edges)
        self.coloring = EdgeColoring(tuple(colors))


def build_reduction(phi: CnfFormula) -> ReductionInstance:
    """The gadget graph, its coloring and the terminal pair for ``phi``.

    Raises ReductionError when some variable never occurs (its gadget
    would leave the truth value unconstrained and the cut size wrong).
    """
    lay = _Layout(phi)
    flow = local_edge_connectivity(lay.graph, lay.s, lay.t)
    assert flow == 6 * lay.m, f"terminal connectivity {flow} != {6 * lay.m}"
    return ReductionInstance(
        graph=lay.graph,
        coloring=lay.coloring,
        s=lay.s,
        t=lay.t,
        m=lay.m,
        vertex_roles=lay.vertex_roles,
        color_roles=lay.color_roles,
        formula=phi,
    )


def sat_brute_force(phi: CnfFormula):
    """First satisfying assignment in binary counting order (x1 is the
    low bit), or None.  Exhaustive, so variable_count is capped at 20."""
    n = phi.variable_count
    if n > 20:
        raise ReductionError(f"{n} variables is past the brute-force cap of 20")
    for mask in range(1 << n):
        assignment = tuple(bool(mask >> j & 1) for j in range(n))
        if phi.evaluate(assignment):
            return assignment
    return None


def cut_from_assignment(inst: ReductionInstance, assignment) -> frozenset:
    """The rainbow minimum s-t cut a satisfying assignment prescribes.

    Block the s-side of the false truth value for every variable (one
    edge per occurrence color), cut every true literal's hub entry on its
    private color, and spend the two shared exit colors on the at most
    two false literals per clause.
    """
    lay = _Layout(inst.formula)
    if len(assignment) != lay.n:
        raise ReductionError("assignment length does not match variable count")
    if not inst.formula.evaluate(assignment):
        raise ReductionError("assignment does not satisfy the formula")
    cut = []
    for j in range(1, lay.n + 1):
        side = lay.sq if assignment[j - 1] else lay.sp
        cut.extend(side[(j, l)] for l in range(1, lay.ell[j - 1] + 1))
    for i, row in enumerate(lay.slots, start=1):
        false_ks = [
            k
            for k, (j, positive, _l) in enumerate(row, start=1)
            if assignment[j - 1] != positive
        ]
        for k, (j, positive, _l) in enumerate(row, start=1):
            if k not in false_ks:
                cut.append(lay.entry[(i, k)])
        if false_ks:
            cut.append(lay.exit[(i, false_ks[0])])
        if len(false_ks) > 1:
            cut.append(lay.middle[(i, false_ks[1])])
    return frozenset(cut)


def extract_assignment(inst: ReductionInstance, cut) -> tuple:
    """Read a satisfying assignment off a rainbow minimum s-t cut.

    A variable whose false-value vertex is severed from s takes that
    value.  A variable with both sides still reachable is genuinely
    unconstrained (its occurrences were cut at both the hub entry and the
    exit path instead): any value works because each clause can afford at
    most two exit-colored edges, forcing a decided true literal; False is
    used.  Both sides severed would need two same-colored edges and
    signals the cut was not rainbow-minimum after all.
    """
    cut = frozenset(cut)
    lay = _Layout(inst.formula)
    g = inst.graph
    if len(cut) != 6 * inst.m:
        raise ExtractionError(f"cut has {len(cut)} edges, expected {6 * inst.m}")
    if not is_rainbow(inst.coloring, cut):
        raise ExtractionError("cut repeats a color")

    reachable = {inst.s}
    stack = [inst.s]
    while stack:
        u = stack.pop()
        for w, eid in g.adj[u]:
            if eid not in cut and w not in reachable:
                reachable.add(w)
                stack.append(w)
    if inst.t in reachable:
        raise ExtractionError("edge set does not separate s from t")

    assignment = []
    for j in range(1, lay.n + 1):
        zero_side = lay.x[(j, 0)] in reachable
        one_side = lay.x[(j, 1)] in reachable
        if not zero_side and not one_side:
            raise ExtractionError(
                f"both value vertices of x{j} are severed; "
                "such a cut cannot be rainbow"
            )
        assignment.append(zero_side and not one_side)
    assignment = tuple(assignment)
    if not inst.formula.evaluate(assignment):
        raise ExtractionError("extracted assignment fails the formula")
    return assignment


@dataclass(frozen=True)
class EquivalenceReport:
    """Agreement between the SAT oracle and the rainbow-cut search.

    ``consistent`` is None when the cut search ran out of budget: that is
    an inconclusive run, never a verdict.
    """

    consistent: bool | None
    satisfiable: bool
    cut_found: bool | None
    assignment: tuple | None
    detail: str


def check_equivalence(
    phi: CnfFormula, node_budget: int = DEFAULT_NODE_BUDGET
) -> EquivalenceReport:
    """Run both oracles on ``phi`` and compare.

    The cut search always takes the exhaustive DFS route (threshold 0):
    the clique makes the number of minimum cuts astronomically large, so
    enumeration must not be attempted.  On agreement with a satisfiable
    formula the witness cut is round-tripped through extract_assignment.
    """
    inst = build_reduction(phi)
    model = sat_brute_force(phi)
    try:
        cert = find_rainbow_min_cut(
            inst.graph,
            inst.coloring,
            inst.s,
            inst.t,
            threshold=0,
            node_budget=node_budget,
        )
    except BudgetExceededError as exc:
        return EquivalenceReport(
            consistent=None,
            satisfiable=model is not None,
            cut_found=None,
            assignment=None,
            detail=str(exc),
        )
    satisfiable = model is not None
    cut_found = cert is not None
    if satisfiable != cut_found:
        return EquivalenceReport(
            consistent=False,
            satisfiable=satisfiable,
            cut_found=cut_found,
            assignment=None,
            detail="oracles disagree: rainbow cut and satisfiability differ",
        )
    assignment = None
    if cut_found:
        assignment = extract_assignment(inst, cert.cut)
    return EquivalenceReport(
        consistent=True,
        satisfiable=satisfiable,
        cut_found=cut_found,
        assignment=assignment,
        detail="",
    )


def _equivalence_worker(args):
    phi, node_budget = args
    return check_equivalence(phi, node_budget=node_budget)


def check_equivalence_batch(
    formulas, jobs: int = 1, node_budget: int = DEFAULT_NODE_BUDGET
) -> list:
    """check_equivalence over many formulas, optionally one per worker."""
    formulas = list(formulas)
    if jobs <= 1:
        return [check_equivalence(phi, node_budget=node_budget) for phi in formulas]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(
            pool.map(_equivalence_worker, [(phi, node_budget) for phi in formulas])
        )
