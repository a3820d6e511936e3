"""Seeded instance construction: random cacti, random trees, the extremal family."""

from __future__ import annotations

import random

from .errors import InfeasibleParams
from .graph import Graph


def random_cactus(
    n_target: int,
    cycle_count: int,
    max_girth: int = 6,
    thread_bias: float = 0.5,
    seed: int = 0,
    max_path: int = 4,
) -> Graph:
    """Grow a cactus on exactly ``n_target`` vertices with ``cycle_count`` cycles.

    Starting from a single vertex, each step picks an existing vertex uniformly
    and attaches either a pendant path (probability ``thread_bias``, length in
    ``[1, max_path]``) or, while cycles remain to be placed, a new cycle through
    that vertex with girth uniform in ``[3, max_girth]``. Girths and path lengths
    are clipped so the vertex budget always leaves room for the remaining cycles.
    Attaching at existing vertices means cycles often share a vertex.
    """
    if n_target < 1 or cycle_count < 0:
        raise InfeasibleParams("need n_target >= 1 and cycle_count >= 0")
    if cycle_count and n_target < 3 * cycle_count:
        raise InfeasibleParams(f"n_target={n_target} too small for {cycle_count} cycles (need >= {3 * cycle_count})")
    if cycle_count and max_girth < 3:
        raise InfeasibleParams("max_girth must be at least 3")
    if not 0.0 <= thread_bias <= 1.0:
        raise InfeasibleParams("thread_bias must lie in [0, 1]")

    rng = random.Random(seed)
    n, edges, left = 1, [], cycle_count
    while left or n < n_target:
        room = n_target - n
        forced = left and room <= 2 * left
        at = rng.randrange(n)
        if left and (forced or rng.random() >= thread_bias):
            girth = rng.randint(3, min(max_girth, room - 2 * (left - 1) + 1))
            ring = [at] + list(range(n, n + girth - 1))
            edges.extend(zip(ring, ring[1:] + ring[:1]))
            n += girth - 1
            left -= 1
        else:
            length = rng.randint(1, max(1, min(max_path, room - 2 * left)))
            chain = [at] + list(range(n, n + length))
            edges.extend(zip(chain, chain[1:]))
            n += length
    return Graph(n, edges)


def random_tree(n: int, seed: int = 0) -> Graph:
    """Random recursive tree: vertex ``i`` attaches to a uniform earlier vertex."""
    if n < 1:
        raise InfeasibleParams("a tree needs at least one vertex")
    rng = random.Random(seed)
    return Graph(n, [(rng.randrange(i), i) for i in range(1, n)])


def extremal_family(b: int, c: int) -> Graph:
    """Cactus with ``L = b`` and ``c`` cycles whose dimensions both reach ``L + 2c``.

    A star with centre ``u = 0`` and ``b + 1`` leaves, plus ``c`` copies of a
    6-cycle carrying one pendant leaf at ``v_i``, each ``v_i`` joined to ``u``.
    Vertex ids: ``0`` centre, ``1..b+1`` star leaves, then per copy ``v_i``,
    the other five cycle vertices in order, and the pendant leaf.
    """
    if b < 0 or c < 2:
        raise InfeasibleParams("extremal family needs b >= 0 and c >= 2")
    edges = [(0, j) for j in range(1, b + 2)]
    n = b + 2
    for _ in range(c):
        ring = list(range(n, n + 6))
        edges.extend(zip(ring, ring[1:] + ring[:1]))
        edges.append((ring[0], n + 6))
        edges.append((0, ring[0]))
        n += 7
    return Graph(n, edges)


def extremal_hubs(b: int, c: int) -> list[int]:
    """Vertex ids of ``v_1..v_c`` in :func:`extremal_family`."""
    return [b + 2 + 7 * i for i in range(c)]
