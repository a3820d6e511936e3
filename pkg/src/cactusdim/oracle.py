"""Exhaustive ground truth: distance-vector checks, brute-force dimensions, zero forcing.

Nothing here uses cactus structure; the routines work on any connected graph
and exist to be obviously correct rather than fast.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .errors import TooLarge
from .graph import Graph, cyclomatic_number

DIMENSION_LIMIT = 14
ZERO_FORCING_LIMIT = 12


def _rows(g: Graph, mode: str):
    if mode == "vertex":
        return g.dist
    if mode == "edge":
        return g.edge_dist
    raise ValueError(f"mode must be 'vertex' or 'edge', got {mode!r}")


def _all_distinct(table, S: list[int]) -> bool:
    vectors = sorted(tuple(int(x) for x in row[S]) for row in table)
    return all(a != b for a, b in zip(vectors, vectors[1:]))


def is_generator_bruteforce(g: Graph, S: Iterable[int], mode: str) -> bool:
    """True iff every vertex (or every edge) has its own distance vector to ``S``."""
    return _all_distinct(_rows(g, mode), sorted(set(S)))


def metric_dimension_bruteforce(
    g: Graph, mode: str, limit: int | None = DIMENSION_LIMIT, max_size: int | None = None
) -> tuple[int, tuple[int, ...]]:
    """Smallest generator by enumerating subsets in order of size.

    Returns the size and the lexicographically first witness of that size.
    ``max_size`` caps the search (useful when a proven upper bound is known and
    ``n`` exceeds ``limit``); exceeding it without success raises ``RuntimeError``.
    """
    table = _rows(g, mode)
    if limit is not None and g.n > limit and max_size is None:
        raise TooLarge(g.n, limit)
    top = g.n if max_size is None else min(max_size, g.n)
    for k in range(top + 1):
        for S in combinations(range(g.n), k):
            if _all_distinct(table, list(S)):
                return k, S
    raise RuntimeError(f"no {mode} generator of size <= {top}")


def zero_forcing_closure(g: Graph, S: Iterable[int]) -> frozenset[int]:
    black = set(S)
    changed = True
    while changed:
        changed = False
        for v in list(black):
            white = [w for w in g.adj[v] if w not in black]
            if len(white) == 1:
                black.add(white[0])
                changed = True
    return frozenset(black)


def zero_forcing_number(g: Graph, limit: int | None = ZERO_FORCING_LIMIT) -> tuple[int, tuple[int, ...]]:
    if limit is not None and g.n > limit:
        raise TooLarge(g.n, limit)
    for k in range(g.n + 1):
        for S in combinations(range(g.n), k):
            if len(zero_forcing_closure(g, S)) == g.n:
                return k, S
    raise AssertionError("the full vertex set always forces")


@dataclass
class BoundAudit:
    """Pass/fail per bound; ``checks`` maps a bound name to (lhs, rhs, holds)."""

    checks: dict[str, tuple[int, int, bool]] = field(default_factory=dict)
    equality: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def add(self, name: str, lhs: int, rhs: int) -> None:
        self.checks[name] = (lhs, rhs, lhs <= rhs)
        if lhs == rhs:
            self.equality.append(name)

    @property
    def passed(self) -> bool:
        return all(ok for _, _, ok in self.checks.values())

    def failures(self) -> list[str]:
        return [k for k, (_, _, ok) in self.checks.items() if not ok]

    def as_dict(self) -> dict:
        return {k: {"lhs": a, "rhs": b, "pass": ok} for k, (a, b, ok) in self.checks.items()}


def audit_bounds(g: Graph, report, z: int | None = None, z_limit: int | None = ZERO_FORCING_LIMIT) -> BoundAudit:
    """Check the cactus upper bounds against a solved report.

    ``report`` needs ``L``, ``B``, ``dim``, ``edim`` attributes. The zero
    forcing bounds are included when ``z`` is given or computable within
    ``z_limit``. Paths with at least two vertices have dimension 1 while
    ``L+B+c = 0``, so the upper ``L+B+c`` checks are skipped for them.
    """
    audit = BoundAudit()
    c = cyclomatic_number(g)
    L, B = report.L, report.B
    audit.add("L+B<=dim", L + B, report.dim)
    audit.add("L+B<=edim", L + B, report.edim)
    if c == 0 and g.n >= 2 and max(g.degree(v) for v in range(g.n)) <= 2:
        audit.notes.append("path: L+B+c upper bound not applicable")
    else:
        audit.add("dim<=L+B+c", report.dim, L + B + c)
        audit.add("edim<=L+B+c", report.edim, L + B + c)
    if c >= 2:
        audit.add("dim<=L+2c", report.dim, L + 2 * c)
        audit.add("edim<=L+2c", report.edim, L + 2 * c)
    if z is None and (z_limit is None or g.n <= z_limit):
        z = zero_forcing_number(g, limit=z_limit)[0]
    if z is not None:
        audit.add("dim<=Z+c", report.dim, z + c)
        audit.add("edim<=Z+c", report.edim, z + c)
        audit.add("L+B<=Z", L + B, z)
    return audit
