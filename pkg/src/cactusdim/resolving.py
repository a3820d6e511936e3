"""Predicates on a candidate landmark set ``S`` in a cactus.

The central entry point is :func:`is_generator_structural`, which decides
whether ``S`` resolves all vertex pairs (``mode="vertex"``) or all edge pairs
(``mode="edge"``) without computing a single distance vector. It combines:

* branch-resolving and biactive checks (both necessary),
* the five cycle configurations A..E evaluated on a canonical labeling of
  every cycle (A, B, C forbid a vertex generator; A, D, E an edge generator),
* critical incidences between cycles sharing a vertex.

Thread lengths count thread vertices ``u_1..u_k``, i.e. the hop distance from
the anchor to the leaf. The C and E thresholds are compared against that.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .cactus import CactusDecomposition, Cycle, ThreadProfile, decompose_cactus, thread_profile
from .errors import NotBiactiveBranchResolving
from .graph import Graph

MODES = ("vertex", "edge")
MODE_CONFIGS = {"vertex": ("A", "B", "C"), "edge": ("A", "D", "E")}


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"mode must be 'vertex' or 'edge', got {mode!r}")


def active_vertices(d: CactusDecomposition, i: int, S: Iterable[int]) -> frozenset[int]:
    row = d.anchor[i]
    return frozenset(row[s] for s in S)


def is_branch_resolving(tp: ThreadProfile, S: Iterable[int]) -> bool:
    S = set(S)
    return all(len(tp.free_at(v, S)) <= 1 for v in tp.threads)


def is_biactive(d: CactusDecomposition, S: Iterable[int]) -> bool:
    S = list(S)
    return all(len(active_vertices(d, i, S)) >= 2 for i in range(d.c))


@dataclass(frozen=True)
class ActiveProfile:
    """One labeling ``v_0..v_{g-1}`` of a cycle with ``v_0`` active.

    ``order`` lists graph vertex ids by label position. ``direction`` is +1
    when the labeling follows the stored orientation of the cycle.
    """

    order: tuple[int, ...]
    active_positions: tuple[int, ...]
    direction: int

    @property
    def g(self) -> int:
        return len(self.order)

    @property
    def k(self) -> int:
        return self.active_positions[-1]

    @property
    def a(self) -> int:
        return len(self.active_positions)


def canonical_labelings(c: Cycle, active: Iterable[int]) -> list[ActiveProfile]:
    """All labelings placing an active vertex at 0 and minimising ``k``.

    Sorted by (active positions, stored orientation first, start vertex position).
    """
    g = c.girth
    pos = sorted(c.position(v) for v in set(active))
    if not pos:
        raise ValueError("canonical labeling needs at least one active vertex")
    cands = []
    for s in pos:
        for dr in (1, -1):
            rel = tuple(sorted(((p - s) * dr) % g for p in pos))
            cands.append((rel[-1], rel, 0 if dr == 1 else 1, s, dr))
    kmin = min(x[0] for x in cands)
    out = []
    for _, rel, _, s, dr in sorted(x for x in cands if x[0] == kmin):
        order = tuple(c.vertices[(s + dr * j) % g] for j in range(g))
        out.append(ActiveProfile(order, rel, dr))
    return out


def canonical_labeling(c: Cycle, active: Iterable[int]) -> ActiveProfile:
    return canonical_labelings(c, active)[0]


def geodesic_triple_exists(c: Cycle, active: Iterable[int]) -> bool:
    g = c.girth
    pos = sorted(c.position(v) for v in set(active))
    for x, y, z in combinations(pos, 3):
        if c.cycle_distance(x, y) + c.cycle_distance(y, z) + c.cycle_distance(x, z) == g:
            return True
    return False


@dataclass
class ConfigReport:
    flags: dict[str, bool]
    witness: dict[str, dict] = field(default_factory=dict)

    def any(self, letters: Iterable[str] = "ABCDE") -> bool:
        return any(self.flags[x] for x in letters)

    def present(self) -> str:
        return "".join(x for x in "ABCDE" if self.flags[x])


def _configs_on_labeling(lab: ActiveProfile, free: list[list[int]]) -> dict[str, dict | None]:
    """Evaluate A..E literally on one labeling.

    ``free[p]`` holds the lengths of the S-free threads at ``v_p``. Returns a
    witness dict per letter that holds, ``None`` otherwise.
    """
    g, k, a = lab.g, lab.k, lab.a
    lo, hi = g // 2, (g + 1) // 2
    even = g % 2 == 0
    out: dict[str, dict | None] = dict.fromkeys("ABCDE")

    if a == 2 and even and k == g // 2:
        out["A"] = {"k": k}

    def thread_in(indices):
        for i in sorted(indices):
            if free[i]:
                return {"i": i, "vertex": lab.order[i]}
        return None

    if k <= lo - 1:
        out["B"] = thread_in(set(range(k, lo)) | set(range(hi + k + 1, g)) | {0})
    if k <= hi - 1:
        out["D"] = thread_in(set(range(k, hi)) | set(range(lo + k + 1, g)) | {0})

    if a == 2 and even and k <= g // 2:
        need = g // 2 - k
        for i in range(k + 1):
            if any(t >= need for t in free[i]):
                out["C"] = {"i": i, "vertex": lab.order[i], "min_length": need}
                break

    if a == 2:
        need = lo - k + 1
        for i in range(k + 1):
            if not any(t >= need for t in free[i]):
                continue
            if even:
                # j == i only happens when k == g/2, where A already holds; the
                # long thread at v_i is then accepted for both clauses.
                j = (g // 2 + k - i) % g
                if not free[j]:
                    continue
                out["E"] = {"i": i, "j": j, "vertex": lab.order[i], "min_length": need}
            else:
                out["E"] = {"i": i, "vertex": lab.order[i], "min_length": need}
            break
    return out


def configurations_for_active(
    c: Cycle, active: Iterable[int], free_lengths: dict[int, list[int]]
) -> ConfigReport:
    """Configuration flags given the active set and S-free thread lengths per cycle vertex.

    Flags are OR-ed over every canonical labeling so they do not depend on
    tie-breaking between labelings with equal ``k``.
    """
    flags = dict.fromkeys("ABCDE", False)
    witness: dict[str, dict] = {}
    for lab in canonical_labelings(c, active):
        free = [free_lengths.get(v, []) for v in lab.order]
        for letter, w in _configs_on_labeling(lab, free).items():
            if w is not None and not flags[letter]:
                flags[letter] = True
                witness[letter] = dict(w, v0=lab.order[0], direction=lab.direction, k=lab.k)
    return ConfigReport(flags, witness)


def detect_configurations(
    g: Graph,
    d: CactusDecomposition,
    tp: ThreadProfile,
    i: int,
    S: Iterable[int],
    *,
    check: bool = True,
) -> ConfigReport:
    S = set(S)
    if check and not (is_branch_resolving(tp, S) and is_biactive(d, S)):
        raise NotBiactiveBranchResolving("configurations are defined only for biactive branch-resolving sets")
    cyc = d.cycles[i]
    free = {v: [t.length for t in tp.free_at(v, S)] for v in cyc}
    return configurations_for_active(cyc, active_vertices(d, i, S), free)


@dataclass(frozen=True)
class SPath:
    endpoints: frozenset[int]
    vertices: tuple[int, ...]
    length: int
    unique: bool


def s_path(c: Cycle, active: Iterable[int]) -> SPath:
    labs = canonical_labelings(c, active)
    lab = labs[0]
    arcs = {frozenset(l.order[: l.k + 1]) for l in labs}
    return SPath(frozenset((lab.order[0], lab.order[lab.k])), lab.order[: lab.k + 1], lab.k, len(arcs) == 1)


@dataclass(frozen=True)
class CriticalStatus:
    vertex_critical: frozenset[int]
    edge_critical: frozenset[int]

    def for_mode(self, mode: str) -> frozenset[int]:
        return self.vertex_critical if mode == "vertex" else self.edge_critical


def critical_vertices(c: Cycle, active: Iterable[int]) -> CriticalStatus:
    p = s_path(c, active)
    g = c.girth
    vc = p.endpoints if p.length <= g // 2 - 1 else frozenset()
    ec = p.endpoints if p.length <= (g + 1) // 2 - 1 else frozenset()
    return CriticalStatus(vc, ec)


def critical_incidences_from(
    d: CactusDecomposition, critical: dict[int, frozenset[int]], cycles: Iterable[int] | None = None
) -> list[tuple[int, int]]:
    """Pairs of cycles (restricted to ``cycles``) sharing a vertex critical on both."""
    allowed = set(range(d.c)) if cycles is None else set(cycles)
    pairs = set()
    for v in d.shared_vertices():
        hits = [i for i in d.membership[v] if i in allowed and v in critical.get(i, ())]
        pairs.update(combinations(sorted(hits), 2))
    return sorted(pairs)


def critical_incidences(d: CactusDecomposition, S: Iterable[int], mode: str) -> list[tuple[int, int]]:
    _check_mode(mode)
    S = list(S)
    crit = {i: critical_vertices(d.cycles[i], active_vertices(d, i, S)).for_mode(mode) for i in range(d.c)}
    return critical_incidences_from(d, crit)


@dataclass(frozen=True)
class Verdict:
    """Outcome of the structural test; falsy when ``S`` is not a generator."""

    ok: bool
    reason: str = ""
    cycle: int | None = None
    configurations: str = ""
    pairs: tuple[tuple[int, int], ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def _tree_verdict(g: Graph, tp: ThreadProfile, S: set[int], mode: str) -> Verdict:
    if g.n <= 1 or (mode == "edge" and g.n == 2):
        return Verdict(True)
    if max(g.degree(v) for v in range(g.n)) <= 2:
        ends = {v for v in range(g.n) if g.degree(v) == 1}
        if S & ends or len(S) >= 2:
            return Verdict(True)
        return Verdict(False, "path needs an endpoint or two landmarks")
    if not is_branch_resolving(tp, S):
        return Verdict(False, "NotBiactiveBranchResolving: two S-free threads at one vertex")
    return Verdict(True)


def is_generator_structural(
    g: Graph,
    S: Iterable[int],
    mode: str,
    d: CactusDecomposition | None = None,
    tp: ThreadProfile | None = None,
) -> Verdict:
    """Decide whether ``S`` resolves ``g`` using only cactus structure."""
    _check_mode(mode)
    S = set(S)
    d = decompose_cactus(g) if d is None else d
    tp = thread_profile(g) if tp is None else tp
    if d.c == 0:
        return _tree_verdict(g, tp, S, mode)
    if not is_branch_resolving(tp, S):
        return Verdict(False, "NotBiactiveBranchResolving: two S-free threads at one vertex")
    for i in range(d.c):
        if len(active_vertices(d, i, S)) < 2:
            return Verdict(False, "NotBiactiveBranchResolving: fewer than two active vertices", cycle=i)
    bad = MODE_CONFIGS[mode]
    for i in range(d.c):
        rep = detect_configurations(g, d, tp, i, S, check=False)
        hit = "".join(x for x in bad if rep.flags[x])
        if hit:
            return Verdict(False, f"cycle {i} contains configuration {hit}", cycle=i, configurations=hit)
    pairs = critical_incidences(d, S, mode)
    if pairs:
        return Verdict(False, f"{mode}-critically incident cycles {pairs}", pairs=tuple(pairs))
    return Verdict(True)
