"""Cactus decomposition and the structural quantities read off it.

Cycles are found as the nontrivial biconnected blocks of the graph; every
such block must be a single cycle. For each cycle ``C`` and each vertex ``v``
on it we record which vertices lie in ``T_v(C)``, the component of
``G - E(C)`` containing ``v``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

import networkx as nx

from .errors import NotACactus
from .graph import Graph


@dataclass(frozen=True)
class Cycle:
    """A cycle stored as a cyclically ordered vertex tuple (orientation fixed at decomposition)."""

    vertices: tuple[int, ...]

    @property
    def girth(self) -> int:
        return len(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __contains__(self, v) -> bool:
        return v in self.vertices

    def position(self, v: int) -> int:
        return self.vertices.index(v)

    def cycle_distance(self, a: int, b: int) -> int:
        """Distance between positions ``a`` and ``b`` around the cycle."""
        d = abs(a - b) % self.girth
        return min(d, self.girth - d)


@dataclass(frozen=True)
class Thread:
    """Pendant path ``u_1 .. u_k`` (``u_1`` a leaf) hanging at ``anchor``.

    ``vertices`` is stored leaf first. ``length`` counts the thread's vertices,
    which equals the hop distance from the anchor to the leaf.
    """

    anchor: int
    vertices: tuple[int, ...]

    @property
    def leaf(self) -> int:
        return self.vertices[0]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def is_free(self, S) -> bool:
        return not any(u in S for u in self.vertices)


@dataclass(frozen=True)
class ThreadProfile:
    threads: dict[int, tuple[Thread, ...]]
    ell: tuple[int, ...]

    def at(self, v: int) -> tuple[Thread, ...]:
        return self.threads.get(v, ())

    def free_at(self, v: int, S) -> list[Thread]:
        return [t for t in self.at(v) if t.is_free(S)]


@dataclass(frozen=True)
class Region:
    cycle: int
    vertices: frozenset[int]
    boundary: frozenset[int]


@dataclass(frozen=True)
class CactusDecomposition:
    graph: Graph
    cycles: tuple[Cycle, ...]
    membership: tuple[tuple[int, ...], ...]
    # anchor[i][x] = the vertex v of cycle i with x in T_v(C_i)
    anchor: tuple[tuple[int, ...], ...]
    _components: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def c(self) -> int:
        return len(self.cycles)

    def component(self, i: int, v: int) -> frozenset[int]:
        """Vertex set of ``T_v(C_i)``."""
        key = (i, v)
        if key not in self._components:
            row = self.anchor[i]
            self._components[key] = frozenset(x for x in range(self.graph.n) if row[x] == v)
        return self._components[key]

    def shared_vertices(self) -> list[int]:
        return [v for v, cs in enumerate(self.membership) if len(cs) > 1]

    def on_cycle(self, v: int) -> bool:
        return bool(self.membership[v])


def _order_cycle(edges: list[tuple[int, int]]) -> tuple[int, ...]:
    nbrs: dict[int, list[int]] = {}
    for u, v in edges:
        nbrs.setdefault(u, []).append(v)
        nbrs.setdefault(v, []).append(u)
    start = min(nbrs)
    order = [start]
    prev, cur = start, min(nbrs[start])
    while cur != start:
        order.append(cur)
        a, b = nbrs[cur]
        prev, cur = cur, (b if a == prev else a)
    return tuple(order)


def decompose_cactus(g: Graph) -> CactusDecomposition:
    """Split ``g`` into its cycles and the ``T_v`` components of each.

    Raises :class:`NotACactus` naming the first offending block (in original
    vertex ids) when a biconnected block is not a plain cycle.
    """
    g.require_connected()
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges)
    blocks = []
    for comp in nx.biconnected_component_edges(nxg):
        comp = list(comp)
        if len(comp) == 1:
            continue
        verts = {x for e in comp for x in e}
        if len(comp) != len(verts):
            raise NotACactus(g.labels[v] for v in verts)
        blocks.append(_order_cycle(comp))
    blocks.sort()
    cycles = tuple(Cycle(b) for b in blocks)

    membership: list[list[int]] = [[] for _ in range(g.n)]
    for i, cyc in enumerate(cycles):
        for v in cyc:
            membership[v].append(i)

    anchors = []
    for cyc in cycles:
        cyc_edges = {frozenset((cyc.vertices[j], cyc.vertices[(j + 1) % len(cyc)])) for j in range(len(cyc))}
        row = [-1] * g.n
        for v in cyc:
            row[v] = v
            queue = deque([v])
            while queue:
                x = queue.popleft()
                for y in g.adj[x]:
                    if row[y] < 0 and frozenset((x, y)) not in cyc_edges:
                        row[y] = v
                        queue.append(y)
        anchors.append(tuple(row))
    return CactusDecomposition(g, cycles, tuple(tuple(m) for m in membership), tuple(anchors))


def is_cactus(g: Graph) -> bool:
    try:
        decompose_cactus(g)
    except NotACactus:
        return False
    return True


def thread_profile(g: Graph) -> ThreadProfile:
    threads: dict[int, list[Thread]] = {}
    for leaf in range(g.n):
        if g.degree(leaf) != 1:
            continue
        path = [leaf]
        prev, cur = leaf, g.adj[leaf][0]
        while g.degree(cur) == 2:
            path.append(cur)
            a, b = g.adj[cur]
            prev, cur = cur, (b if a == prev else a)
        if g.degree(cur) >= 3:
            threads.setdefault(cur, []).append(Thread(cur, tuple(path)))
    ell = [0] * g.n
    for v, ts in threads.items():
        ell[v] = len(ts)
    return ThreadProfile({v: tuple(sorted(ts, key=lambda t: t.leaf)) for v, ts in threads.items()}, tuple(ell))


def compute_L(tp: ThreadProfile) -> int:
    return sum(l - 1 for l in tp.ell if l > 1)


def branch_active_vertices(d: CactusDecomposition, i: int) -> frozenset[int]:
    g = d.graph
    out = set()
    for v in d.cycles[i]:
        if g.degree(v) >= 4 or any(x != v and g.degree(x) >= 3 for x in d.component(i, v)):
            out.add(v)
    return frozenset(out)


def compute_B(d: CactusDecomposition) -> int:
    return sum(max(0, 2 - len(branch_active_vertices(d, i))) for i in range(d.c))


def _cycle_edge_set(d: CactusDecomposition) -> set[frozenset[int]]:
    out = set()
    for cyc in d.cycles:
        vs = cyc.vertices
        out.update(frozenset((vs[j], vs[(j + 1) % len(vs)])) for j in range(len(vs)))
    return out


def unicyclic_region(g: Graph, d: CactusDecomposition, i: int) -> Region:
    """Vertices gravitating to cycle ``i``, with the boundary vertices among them.

    A vertex gravitates to ``C_i`` when some path reaches ``C_i`` without using
    a cycle edge and without passing through a cycle vertex on the way. So the
    search leaves ``C_i`` over non-cycle edges only, and stops expanding at any
    vertex that lies on a cycle.
    """
    cycle_edges = _cycle_edge_set(d)
    region = set(d.cycles[i])
    queue = deque(d.cycles[i])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if y in region or frozenset((x, y)) in cycle_edges:
                continue
            region.add(y)
            if not d.membership[y]:
                queue.append(y)
    boundary = {v for v in region if any(j != i for j in d.membership[v])}
    return Region(i, frozenset(region), frozenset(boundary))


def regional_set(r: Region, S: Iterable[int]) -> frozenset[int]:
    return frozenset(set(S) & r.vertices) | r.boundary
