"""Simple undirected graphs, the edge-list format, and hop distances."""

from __future__ import annotations

from collections import deque
from functools import cached_property
from typing import Iterable

import numpy as np

from .errors import Disconnected, DuplicateEdge, MalformedLine, SelfLoop

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph on vertex ids ``0..n-1``.

    ``labels[i]`` is the original id of vertex ``i`` (identity unless the
    graph came from :func:`parse_edge_list` with sparse ids). Instances are
    treated as immutable; derived tables are computed lazily and cached.
    """

    def __init__(self, n: int, edges: Iterable[Edge], labels: Iterable[int] | None = None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        seen: set[Edge] = set()
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise SelfLoop(u)
            e = _norm(u, v)
            if e in seen:
                raise DuplicateEdge(*e)
            seen.add(e)
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(seen))
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self.labels: tuple[int, ...] = tuple(range(n)) if labels is None else tuple(labels)
        if len(self.labels) != n:
            raise ValueError("labels must have one entry per vertex")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edge_set

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, queue = [s], deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def require_connected(self) -> None:
        if self.n == 0:
            raise Disconnected(0)
        k = len(self.components())
        if k != 1:
            raise Disconnected(k)

    @cached_property
    def dist(self) -> np.ndarray:
        return all_pairs_distances(self)

    @cached_property
    def edge_dist(self) -> np.ndarray:
        """``m x n`` table of vertex-to-edge distances, row per edge."""
        if not self.edges:
            return np.zeros((0, self.n), dtype=np.int64)
        ends = np.asarray(self.edges)
        return np.minimum(self.dist[ends[:, 0]], self.dist[ends[:, 1]])

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph, relabelled densely; returns it with the id map back into ``self``."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        sub_edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph(len(keep), sub_edges, [self.labels[v] for v in keep]), keep

    def relabel_ids(self, vertices: Iterable[int]) -> list[int]:
        return sorted(self.labels[v] for v in vertices)


def all_pairs_distances(g: Graph) -> np.ndarray:
    """Hop-count distance table by one breadth-first search per source.

    Unreachable pairs get ``-1``; callers that need finiteness check
    connectivity first.
    """
    n = g.n
    dist = np.full((n, n), -1, dtype=np.int64)
    for s in range(n):
        row = dist[s]
        row[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = row[u] + 1
            for w in g.adj[u]:
                if row[w] < 0:
                    row[w] = du
                    queue.append(w)
    return dist


def vertex_edge_distance(dist: np.ndarray, u: int, e: Edge) -> int:
    return int(min(dist[u, e[0]], dist[u, e[1]]))


def cyclomatic_number(g: Graph) -> int:
    return g.m - g.n + 1


def parse_edge_list(text: str | bytes, *, require_connected: bool = True) -> Graph:
    """Parse whitespace-separated ``u v`` lines into a :class:`Graph`.

    Blank lines are skipped and ``#`` starts a comment line. A header comment
    ``# n=K`` declares vertices ``0..K-1`` even if they carry no edge, which is
    how the one-vertex graph is written. Arbitrary non-negative ids are
    compacted to ``0..n-1`` in increasing order; the original ids are kept in
    ``Graph.labels``.
    """
    if isinstance(text, bytes):
        text = text.decode()
    declared = 0
    raw: list[tuple[int, int, int]] = []
    seen: dict[Edge, int] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s:
            continue
        if s.startswith("#"):
            body = s[1:].strip().replace(" ", "")
            if body.startswith("n="):
                try:
                    declared = max(declared, int(body[2:]))
                except ValueError:
                    raise MalformedLine(lineno, line) from None
            continue
        parts = s.split()
        if len(parts) != 2:
            raise MalformedLine(lineno, line)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedLine(lineno, line) from None
        if u < 0 or v < 0:
            raise MalformedLine(lineno, line)
        if u == v:
            raise SelfLoop(u, lineno)
        e = _norm(u, v)
        if e in seen:
            raise DuplicateEdge(*e, lineno=lineno)
        seen[e] = lineno
        raw.append((u, v, lineno))

    ids = set(range(declared))
    for u, v, _ in raw:
        ids.update((u, v))
    labels = sorted(ids)
    index = {x: i for i, x in enumerate(labels)}
    g = Graph(len(labels), [(index[u], index[v]) for u, v, _ in raw], labels)
    if require_connected:
        g.require_connected()
    return g


def to_edge_list(g: Graph, header: str | None = None) -> str:
    """Canonical edge-list text, one ``u v`` line per edge, original ids."""
    lines = []
    if header:
        lines.extend("# " + h for h in header.splitlines())
    if g.labels == tuple(range(g.n)):
        lines.append(f"# n={g.n}")
    lab = g.labels
    lines.extend(f"{lab[u]} {lab[v]}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def to_dot(g: Graph, highlight: Iterable[int] = (), color: str = "lightblue") -> str:
    hl = set(highlight)
    out = ["graph {"]
    for v in range(g.n):
        attrs = f' [style=filled, fillcolor="{color}"]' if v in hl else ""
        out.append(f"  {g.labels[v]}{attrs};")
    for u, v in g.edges:
        out.append(f"  {g.labels[u]} -- {g.labels[v]};")
    out.append("}")
    return "\n".join(out) + "\n"


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
