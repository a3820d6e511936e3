"""Exact vertex and edge metric dimension of a cactus.

The pipeline, run separately for each mode:

1. ``S1``: a smallest branch-resolving set (all threads but a shortest one at
   every multi-thread vertex get their leaf), ``|S1| = L``.
2. Cycles with at least two branch-active vertices have a fixed active set.
   The other ("flexible") cycles need ``2 - b`` extra active vertices; each
   choice of those is a placement, ``|S2| = B``.
3. A cycle is positive when every placement leaves one of the mode's
   forbidden configurations on it. Positive cycles each get a third vertex
   forming a geodesic triple.
4. Negative cycles use a configuration-free placement, picked to minimise
   critical incidences (a nice set). The remaining incidences among negative
   cycles form the incidence graph; a minimum vertex cover of it says which
   cycles also get a geodesic third vertex.

The result is ``L + B + positives + tau`` together with a certificate set of
exactly that size that passes :func:`~cactusdim.resolving.is_generator_structural`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .cactus import (
    CactusDecomposition,
    ThreadProfile,
    branch_active_vertices,
    compute_L,
    decompose_cactus,
    thread_profile,
)
from .errors import InternalInconsistency
from .graph import Graph, cyclomatic_number
from .oracle import DIMENSION_LIMIT, is_generator_bruteforce
from .resolving import (
    MODE_CONFIGS,
    MODES,
    ConfigReport,
    active_vertices,
    canonical_labeling,
    critical_incidences_from,
    critical_vertices,
    detect_configurations,
    is_generator_structural,
)


@dataclass(frozen=True)
class PlacementChoice:
    """Extra landmarks making a flexible cycle biactive.

    ``anchors`` are the cycle vertices that become active; ``vertices`` are the
    landmarks actually added (the leaf of the anchor's thread when it has one).
    """

    cycle: int
    anchors: tuple[int, ...]
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class IncidenceGraph:
    nodes: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]


@dataclass
class CycleClass:
    positive: bool
    feasible: list[PlacementChoice]


@dataclass
class CycleDiagnostics:
    index: int
    girth: int
    vertices: tuple[int, ...]
    b: int
    branch_active: tuple[int, ...]
    flexible: bool
    classes: dict[str, str] = field(default_factory=dict)
    placement: dict[str, tuple[int, ...]] = field(default_factory=dict)
    flags: dict[str, str] = field(default_factory=dict)
    third: dict[str, int | None] = field(default_factory=dict)


@dataclass
class DimensionReport:
    n: int
    m: int
    cyclomatic: int
    L: int
    B: int
    c_abc: int
    c_ade: int
    tau_vi: int
    tau_ei: int
    dim: int
    edim: int
    cert_vertex: tuple[int, ...]
    cert_edge: tuple[int, ...]
    per_cycle: list[CycleDiagnostics] = field(default_factory=list)
    incidence_vi: IncidenceGraph = IncidenceGraph((), ())
    incidence_ei: IncidenceGraph = IncidenceGraph((), ())
    cover_vi: tuple[int, ...] = ()
    cover_ei: tuple[int, ...] = ()
    tree: bool = False

    def positives(self, mode: str) -> int:
        return self.c_abc if mode == "vertex" else self.c_ade

    def value(self, mode: str) -> int:
        return self.dim if mode == "vertex" else self.edim

    def certificate(self, mode: str) -> tuple[int, ...]:
        return self.cert_vertex if mode == "vertex" else self.cert_edge


def base_branch_resolving_set(tp: ThreadProfile) -> frozenset[int]:
    S = set()
    for v, threads in tp.threads.items():
        if len(threads) < 2:
            continue
        keep_free = min(threads, key=lambda t: (t.length, t.leaf))
        S.update(t.leaf for t in threads if t is not keep_free)
    return frozenset(S)


def _landmark_for(tp: ThreadProfile, w: int) -> int:
    threads = tp.at(w)
    return threads[0].leaf if threads else w


def enumerate_biactive_placements(
    g: Graph, d: CactusDecomposition, tp: ThreadProfile, i: int, S1=frozenset()
) -> list[PlacementChoice]:
    """Placements for cycle ``i``; empty when its active set is already fixed.

    Candidate anchors are the cycle vertices that are not branch-active. Such a
    vertex lies on no other cycle and carries at most one thread, so activating
    it costs one landmark; the thread's leaf is used when present since that
    also removes an S-free thread.
    """
    ba = branch_active_vertices(d, i)
    need = 2 - len(ba)
    if need <= 0:
        return []
    cyc = d.cycles[i]
    cand = [w for w in cyc if w not in ba and not (set(d.component(i, w)) & set(S1))]
    out = []
    for anchors in combinations(sorted(cand, key=cyc.position), need):
        out.append(PlacementChoice(i, anchors, tuple(_landmark_for(tp, w) for w in anchors)))
    return out


class _Structure:
    """Per-graph data shared by both modes."""

    def __init__(self, g: Graph, d: CactusDecomposition | None = None, tp: ThreadProfile | None = None):
        self.g = g
        self.d = decompose_cactus(g) if d is None else d
        self.tp = thread_profile(g) if tp is None else tp
        self.L = compute_L(self.tp)
        self.S1 = base_branch_resolving_set(self.tp)
        self.branch_active = [branch_active_vertices(self.d, i) for i in range(self.d.c)]
        self.B = sum(max(0, 2 - len(ba)) for ba in self.branch_active)
        self.placements = [
            enumerate_biactive_placements(g, self.d, self.tp, i, self.S1) for i in range(self.d.c)
        ]
        for i, opts in enumerate(self.placements):
            if len(self.branch_active[i]) < 2 and not opts:
                raise InternalInconsistency(f"cycle {i} cannot be made biactive")
        self.default = {i: opts[0] for i, opts in enumerate(self.placements) if opts}
        self._flag_cache: dict[tuple[int, PlacementChoice | None], ConfigReport] = {}

    def landmarks(self, choice: dict[int, PlacementChoice]) -> set[int]:
        S = set(self.S1)
        for p in choice.values():
            S.update(p.vertices)
        return S

    def set_with(self, i: int, p: PlacementChoice | None) -> set[int]:
        choice = dict(self.default)
        if p is not None:
            choice[i] = p
        return self.landmarks(choice)

    def flags(self, i: int, p: PlacementChoice | None) -> ConfigReport:
        # Flags of cycle i depend only on S1 and cycle i's own placement.
        key = (i, p)
        if key not in self._flag_cache:
            S = self.set_with(i, p)
            self._flag_cache[key] = detect_configurations(self.g, self.d, self.tp, i, S, check=False)
        return self._flag_cache[key]

    def critical(self, i: int, S, mode: str) -> frozenset[int]:
        return critical_vertices(self.d.cycles[i], active_vertices(self.d, i, S)).for_mode(mode)


def classify_cycle(st: _Structure, i: int, mode: str) -> CycleClass:
    bad = MODE_CONFIGS[mode]
    opts = st.placements[i]
    if not opts:
        return CycleClass(st.flags(i, None).any(bad), [])
    feasible = [p for p in opts if not st.flags(i, p).any(bad)]
    return CycleClass(not feasible, feasible)


def select_nice_set(st: _Structure, classes: list[CycleClass], mode: str) -> tuple[set[int], dict[int, PlacementChoice]]:
    """Pick placements so negative cycles avoid configurations with fewest critical incidences.

    A flexible cycle has one branch-active vertex (or none, and then the graph
    is unicyclic). Its placement anchors lie on no other cycle, so the only
    vertex at which it can be critically incident is its branch-active vertex.
    Each cycle therefore either can or cannot avoid being critical there, and
    the choice never affects another cycle's options: taking a non-critical
    feasible placement whenever one exists minimises the set of incident pairs
    outright, not just its size. Ties go to the first placement in cycle order.
    """
    shared = set(st.d.shared_vertices())
    choice: dict[int, PlacementChoice] = {}
    for i, opts in enumerate(st.placements):
        if not opts:
            continue
        cls = classes[i]
        if cls.positive:
            choice[i] = opts[0]
            continue
        best = min(
            cls.feasible,
            key=lambda p: len(st.critical(i, st.set_with(i, p), mode) & shared),
        )
        choice[i] = best
    return st.landmarks(choice), choice


def build_incidence_graph(st: _Structure, S, classes: list[CycleClass], mode: str) -> IncidenceGraph:
    negative = [i for i in range(st.d.c) if not classes[i].positive]
    crit = {i: st.critical(i, S, mode) for i in negative}
    return IncidenceGraph(tuple(range(st.d.c)), tuple(critical_incidences_from(st.d, crit, negative)))


class _CoverNumber:
    """Exact vertex cover number of induced subgraphs of one fixed graph, memoised by vertex set."""

    def __init__(self, adj: dict[int, set[int]]):
        self.adj = adj
        self.memo: dict[frozenset, int] = {}

    def __call__(self, alive: frozenset) -> int:
        if alive in self.memo:
            return self.memo[alive]
        adj = {v: self.adj[v] & alive for v in alive}
        taken, rest = 0, set(v for v in alive if adj[v])
        # a degree-one vertex can always defer to its neighbour
        leaf = next((v for v in rest if len(adj[v] & rest) == 1), None)
        while leaf is not None:
            (w,) = adj[leaf] & rest
            rest.discard(w)
            taken += 1
            rest = {v for v in rest if adj[v] & rest}
            leaf = next((v for v in rest if len(adj[v] & rest) == 1), None)
        if not rest:
            out = taken
        else:
            comps, seen = [], set()
            for v in sorted(rest):
                if v in seen:
                    continue
                comp, stack = set(), [v]
                while stack:
                    x = stack.pop()
                    if x in comp:
                        continue
                    comp.add(x)
                    stack.extend(adj[x] & rest)
                seen |= comp
                comps.append(frozenset(comp))
            if len(comps) > 1:
                out = taken + sum(self(c) for c in comps)
            else:
                v = max(sorted(rest), key=lambda x: len(adj[x] & rest))
                nbrs = adj[v] & rest
                out = taken + min(1 + self(frozenset(rest - {v})), len(nbrs) + self(frozenset(rest - nbrs - {v})))
        self.memo[alive] = out
        return out


def min_vertex_cover(ig: IncidenceGraph) -> tuple[int, tuple[int, ...]]:
    """Exact minimum vertex cover, lexicographically smallest among the minimum ones.

    The cover number comes from a memoised branch and bound (leaf rule,
    component splitting, branching on a maximum-degree vertex). The cover
    itself is built in ascending vertex order: take ``v`` whenever some minimum
    cover still contains it, otherwise commit to all its remaining neighbours.
    """
    adj: dict[int, set[int]] = {v: set() for v in ig.nodes}
    for u, v in ig.edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    tau = _CoverNumber(adj)
    alive = frozenset(v for v in adj if adj[v])
    budget = total = tau(alive)
    cover = []
    for v in sorted(alive):
        if v not in alive:
            continue
        live_nbrs = adj[v] & alive
        if not live_nbrs:
            alive -= {v}
            continue
        if 1 + tau(alive - {v}) == budget:
            cover.append(v)
            alive -= {v}
            budget -= 1
        else:
            cover.extend(live_nbrs)
            alive -= live_nbrs | {v}
            budget -= len(live_nbrs)
    return total, tuple(sorted(cover))


def geodesic_third_vertex(st: _Structure, i: int, S) -> int:
    """Lowest-position non-active vertex of cycle ``i`` forming a geodesic triple with two active ones."""
    cyc = st.d.cycles[i]
    active = active_vertices(st.d, i, S)
    lab = canonical_labeling(cyc, active)
    g = cyc.girth
    act = lab.active_positions
    for m in range(g):
        if m in act:
            continue
        for x, y in combinations(act, 2):
            dd = cyc.cycle_distance
            if dd(x, y) + dd(y, m) + dd(x, m) == g:
                return lab.order[m]
    raise InternalInconsistency(f"no geodesic triple vertex on cycle {i}")


def _tree_report(g: Graph, tp: ThreadProfile) -> DimensionReport:
    L = compute_L(tp)
    if g.n == 1:
        dim = edim = 0
        cv = ce = ()
    elif max(g.degree(v) for v in range(g.n)) <= 2:
        end = min(v for v in range(g.n) if g.degree(v) == 1)
        dim, cv = 1, (end,)
        edim, ce = (0, ()) if g.n == 2 else (1, (end,))
    else:
        cv = ce = tuple(sorted(base_branch_resolving_set(tp)))
        dim = edim = L
    return DimensionReport(g.n, g.m, cyclomatic_number(g), L, 0, 0, 0, 0, 0, dim, edim, cv, ce, tree=True)


def compute_dimensions(g: Graph, *, verify: bool = True) -> DimensionReport:
    """Vertex and edge metric dimension of a connected cactus, with certificates.

    With ``verify`` each certificate is re-checked by the structural verifier
    and, for graphs within the oracle size limit, by distance vectors.
    """
    g.require_connected()
    st = _Structure(g)
    d, tp = st.d, st.tp
    if d.c == 0:
        return _tree_report(g, tp)

    diags = [
        CycleDiagnostics(
            i,
            d.cycles[i].girth,
            d.cycles[i].vertices,
            len(st.branch_active[i]),
            tuple(sorted(st.branch_active[i])),
            bool(st.placements[i]),
        )
        for i in range(d.c)
    ]
    results = {}
    for mode in MODES:
        classes = [classify_cycle(st, i, mode) for i in range(d.c)]
        S, choice = select_nice_set(st, classes, mode)
        ig = build_incidence_graph(st, S, classes, mode)
        tau, cover = min_vertex_cover(ig)
        cert = set(S)
        extra_on = [i for i in range(d.c) if classes[i].positive] + list(cover)
        for i in range(d.c):
            diags[i].classes[mode] = "positive" if classes[i].positive else "negative"
            diags[i].placement[mode] = choice[i].vertices if i in choice else ()
            diags[i].flags[mode] = detect_configurations(g, d, tp, i, S, check=False).present()
            diags[i].third[mode] = None
        for i in sorted(extra_on):
            x = geodesic_third_vertex(st, i, S)
            diags[i].third[mode] = x
            cert.add(x)
        positives = sum(c.positive for c in classes)
        value = st.L + st.B + positives + tau
        if len(cert) != value:
            raise InternalInconsistency(f"{mode} certificate has {len(cert)} vertices, formula gives {value}")
        if verify:
            verdict = is_generator_structural(g, cert, mode, d, tp)
            if not verdict:
                raise InternalInconsistency(f"{mode} certificate rejected: {verdict.reason}")
            if g.n <= DIMENSION_LIMIT and not is_generator_bruteforce(g, cert, mode):
                raise InternalInconsistency(f"{mode} certificate fails the distance-vector check")
        results[mode] = (positives, ig, tau, cover, tuple(sorted(cert)), value)

    pv, igv, tv, cov_v, cert_v, dim = results["vertex"]
    pe, ige, te, cov_e, cert_e, edim = results["edge"]
    return DimensionReport(
        g.n, g.m, cyclomatic_number(g), st.L, st.B, pv, pe, tv, te, dim, edim, cert_v, cert_e,
        per_cycle=diags, incidence_vi=igv, incidence_ei=ige, cover_vi=cov_v, cover_ei=cov_e,
    )
