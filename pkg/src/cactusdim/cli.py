"""Command-line interface: ``cactusdim analyze|fuzz|gen|zf``.

Exit codes: 0 ok, 1 usage/parse/limit error, 2 input is not a cactus,
3 fuzz campaign found a mismatch.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .cactus import decompose_cactus, unicyclic_region
from .errors import GraphError, InfeasibleParams, NotACactus, TooLarge
from .generators import extremal_family, random_cactus, random_tree
from .graph import Graph, parse_edge_list, to_dot, to_edge_list
from .oracle import (
    DIMENSION_LIMIT,
    ZERO_FORCING_LIMIT,
    audit_bounds,
    metric_dimension_bruteforce,
    zero_forcing_number,
)
from .solver import DimensionReport, compute_dimensions

EXIT_OK, EXIT_USAGE, EXIT_NOT_CACTUS, EXIT_MISMATCH = 0, 1, 2, 3


def _read_graph(path: str) -> Graph:
    if path == "-":
        return parse_edge_list(sys.stdin.read())
    with open(path, "rb") as fh:
        return parse_edge_list(fh.read())


def report_to_json(g: Graph, r: DimensionReport, audits: dict | None = None) -> dict:
    lab = g.labels

    def ids(vs):
        return sorted(lab[v] for v in vs)

    return {
        "n": r.n,
        "m": r.m,
        "cyclomatic": r.cyclomatic,
        "is_cactus": True,
        "L": r.L,
        "B": r.B,
        "per_cycle": [
            {
                "index": c.index,
                "girth": c.girth,
                "vertices": [lab[v] for v in c.vertices],
                "b": c.b,
                "class_abc": c.classes["vertex"],
                "class_ade": c.classes["edge"],
                "flags": dict(c.flags),
                "placement": {mode: ids(p) for mode, p in c.placement.items()},
                "third": {mode: (None if x is None else lab[x]) for mode, x in c.third.items()},
            }
            for c in r.per_cycle
        ],
        "c_abc": r.c_abc,
        "c_ade": r.c_ade,
        "tau_vi": r.tau_vi,
        "tau_ei": r.tau_ei,
        "incidence_vi": [list(e) for e in r.incidence_vi.edges],
        "incidence_ei": [list(e) for e in r.incidence_ei.edges],
        "dim": r.dim,
        "edim": r.edim,
        "cert_vertex": ids(r.cert_vertex),
        "cert_edge": ids(r.cert_edge),
        "audits": audits or {},
    }


def _human(g: Graph, r: DimensionReport, mode: str, audits: dict) -> str:
    lab = g.labels
    out = [f"n={r.n} m={r.m} cycles={r.cyclomatic}"]
    if r.tree:
        out.append(f"tree fast path: dim=edim=L={r.L}" if r.dim == r.edim == r.L else f"tree fast path: dim={r.dim} edim={r.edim} (L={r.L})")
    else:
        parts = []
        if mode in ("vertex", "both"):
            parts.append(f"dim={r.dim}")
        if mode in ("edge", "both"):
            parts.append(f"edim={r.edim}")
        out.append(" ".join(parts))
        out.append(
            f"L={r.L} B={r.B} c_abc={r.c_abc} c_ade={r.c_ade} tau_vi={r.tau_vi} tau_ei={r.tau_ei}"
        )
        out.append(f"{'cycle':>5} {'girth':>5} {'b':>2} {'ABC':>8} {'ADE':>8}  vertices")
        for c in r.per_cycle:
            verts = " ".join(str(lab[v]) for v in c.vertices)
            out.append(f"{c.index:>5} {c.girth:>5} {c.b:>2} {c.classes['vertex']:>8} {c.classes['edge']:>8}  {verts}")
    if mode in ("vertex", "both"):
        out.append("vertex certificate: " + " ".join(str(x) for x in sorted(lab[v] for v in r.cert_vertex)))
    if mode in ("edge", "both"):
        out.append("edge certificate:   " + " ".join(str(x) for x in sorted(lab[v] for v in r.cert_edge)))
    for name, a in audits.items():
        out.append(f"audit {name}: {'pass' if a['pass'] else 'FAIL'} ({a['lhs']} <= {a['rhs']})")
    return "\n".join(out)


def cmd_analyze(args) -> int:
    try:
        g = _read_graph(args.input)
        r = compute_dimensions(g)
    except NotACactus as e:
        print(str(e), file=sys.stderr)
        return EXIT_NOT_CACTUS
    except (GraphError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    audits = audit_bounds(g, r, z_limit=args.zf_limit).as_dict()
    if args.json:
        print(json.dumps(report_to_json(g, r, audits), indent=2))
    else:
        print(_human(g, r, args.mode, audits))
    if args.dot:
        cert = set(r.cert_edge if args.mode == "edge" else r.cert_vertex)
        with open(args.dot, "w") as fh:
            fh.write(to_dot(g, cert))
    return EXIT_OK


def region_isometry_ok(g: Graph, d=None) -> bool:
    d = decompose_cactus(g) if d is None else d
    for i in range(d.c):
        reg = unicyclic_region(g, d, i)
        sub, keep = g.induced(reg.vertices)
        if (sub.dist != g.dist[keep][:, keep]).any():
            return False
    return True


def _instance(seed: int, idx: int, max_n: int, cycles: tuple[int, int]) -> Graph:
    rng = random.Random(f"{seed}-{idx}")
    c = rng.randint(*cycles)
    lo = max(3 * c, 1)
    n = rng.randint(lo, max(lo, max_n))
    return random_cactus(
        n, c, max_girth=rng.randint(3, 9), thread_bias=rng.random(), seed=rng.getrandbits(64), max_path=rng.randint(1, 4)
    )


def _mismatch(g: Graph, oracle_limit: int) -> str | None:
    """Describe how solver and oracle disagree on ``g``; ``None`` if they agree."""
    try:
        r = compute_dimensions(g)
    except Exception as e:  # any solver failure counts as a mismatch
        return f"solver raised {type(e).__name__}: {e}"
    got = (r.dim, r.edim)
    want = tuple(metric_dimension_bruteforce(g, m, limit=oracle_limit)[0] for m in ("vertex", "edge"))
    if got != want:
        return f"solver dim,edim={got} oracle={want}"
    return None


def shrink(g: Graph, still_bad) -> Graph:
    """Greedy vertex deletion keeping ``g`` a connected cactus on which ``still_bad`` holds."""
    changed = True
    while changed and g.n > 1:
        changed = False
        for v in range(g.n - 1, -1, -1):
            h, _ = g.induced(x for x in range(g.n) if x != v)
            if not h.is_connected():
                continue
            try:
                decompose_cactus(h)
            except NotACactus:
                continue
            if still_bad(h):
                g, changed = h, True
                break
    return g


def _fuzz_one(job):
    seed, idx, max_n, cycles, oracle_limit, zf_limit = job
    g = _instance(seed, idx, max_n, cycles)
    rec = {"idx": idx, "n": g.n, "oracle": g.n <= oracle_limit, "mismatch": None, "audit": [], "regions": True}
    try:
        r = compute_dimensions(g)
    except Exception as e:
        r = None
        rec["mismatch"] = f"solver raised {type(e).__name__}: {e}"
    if r is not None:
        if rec["oracle"]:
            rec["mismatch"] = _mismatch(g, oracle_limit)
        rec["audit"] = audit_bounds(g, r, z_limit=zf_limit).failures()
        rec["regions"] = region_isometry_ok(g)
    if rec["mismatch"]:
        small = shrink(g, lambda h: _mismatch(h, oracle_limit) is not None)
        rec["graph"] = to_edge_list(g)
        rec["shrunk"] = to_edge_list(small)
    elif rec["audit"] or not rec["regions"]:
        rec["graph"] = to_edge_list(g)
    return rec


def run_fuzz(count: int, seed: int, max_n: int, cycles=(1, 3), oracle_limit=DIMENSION_LIMIT, zf_limit=ZERO_FORCING_LIMIT, jobs: int = 1):
    todo = [(seed, i, max_n, tuple(cycles), oracle_limit, zf_limit) for i in range(count)]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as ex:
            return list(ex.map(_fuzz_one, todo, chunksize=8))
    return [_fuzz_one(j) for j in todo]


def _parse_range(text: str) -> tuple[int, int]:
    if "-" in text:
        a, b = text.split("-", 1)
        lo, hi = int(a), int(b)
    else:
        lo = hi = int(text)
    if lo < 0 or hi < lo:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    return lo, hi


def cmd_fuzz(args) -> int:
    recs = run_fuzz(args.count, args.seed, args.max_n, args.cycles, args.oracle_limit, args.zf_limit, args.jobs)
    checked = [r for r in recs if r["oracle"]]
    bad = [r for r in recs if r["mismatch"]]
    audit_bad = [r for r in recs if r["audit"]]
    region_bad = [r for r in recs if not r["regions"]]
    for r in bad:
        print(f"# instance {r['idx']}: {r['mismatch']}")
        print(r["graph"], end="")
        print("# minimized reproduction:")
        print(r["shrunk"], end="")
    for r in audit_bad:
        print(f"# instance {r['idx']}: bound audit failed: {', '.join(r['audit'])}")
        print(r["graph"], end="")
    for r in region_bad:
        print(f"# instance {r['idx']}: a unicyclic region is not isometric")
        print(r["graph"], end="")
    print(f"{len(checked) - sum(1 for r in checked if r['mismatch'])}/{len(checked)} match")
    skipped = len(recs) - len(checked)
    if skipped:
        print(f"oracle skipped on {skipped} instance(s) above n={args.oracle_limit}; bound audits only")
    print(f"audit failures: {len(audit_bad)}; region isometry failures: {len(region_bad)}")
    return EXIT_MISMATCH if (bad or audit_bad or region_bad) else EXIT_OK


def cmd_gen(args) -> int:
    try:
        if args.kind == "cactus":
            g = random_cactus(args.n, args.cycles, args.max_girth, args.thread_bias, args.seed)
            head = f"random cactus n={args.n} cycles={args.cycles} seed={args.seed}"
        elif args.kind == "tree":
            g = random_tree(args.n, args.seed)
            head = f"random tree seed={args.seed}"
        else:
            g = extremal_family(args.b, args.c)
            head = f"extremal family b={args.b} c={args.c}"
    except InfeasibleParams as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(to_edge_list(g, head))
    return EXIT_OK


def cmd_zf(args) -> int:
    try:
        g = _read_graph(args.input)
        z, witness = zero_forcing_number(g, limit=args.limit)
    except TooLarge as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    print(f"Z={z}")
    print("witness: " + " ".join(str(g.labels[v]) for v in witness))
    try:
        r = compute_dimensions(g)
    except NotACactus:
        print("not a cactus: bound audit skipped")
        return EXIT_OK
    audit = audit_bounds(g, r, z=z)
    for name in ("dim<=Z+c", "edim<=Z+c", "L+B<=Z"):
        lhs, rhs, ok = audit.checks[name]
        print(f"{name}: {'pass' if ok else 'FAIL'} ({lhs} <= {rhs})")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cactusdim", description="Vertex and edge metric dimension of cactus graphs.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="solve one graph given as an edge list")
    a.add_argument("input", help="edge-list file, or - for stdin")
    a.add_argument("--mode", choices=("vertex", "edge", "both"), default="both")
    a.add_argument("--json", action="store_true", help="emit the JSON report")
    a.add_argument("--dot", metavar="PATH", help="write a DOT drawing with certificate vertices filled")
    a.add_argument("--zf-limit", type=int, default=ZERO_FORCING_LIMIT, help="largest n for the zero forcing audit")
    a.set_defaults(func=cmd_analyze)

    f = sub.add_parser("fuzz", help="compare solver and brute force on random cacti")
    f.add_argument("--count", type=int, default=100)
    f.add_argument("--seed", type=int, default=0)
    f.add_argument("--max-n", type=int, default=13)
    f.add_argument("--cycles", type=_parse_range, default=(1, 3), help="cycle count or range, e.g. 1-3")
    f.add_argument("--oracle-limit", type=int, default=DIMENSION_LIMIT)
    f.add_argument("--zf-limit", type=int, default=ZERO_FORCING_LIMIT)
    f.add_argument("--jobs", type=int, default=1)
    f.set_defaults(func=cmd_fuzz)

    gp = sub.add_parser("gen", help="print an instance as an edge list")
    gsub = gp.add_subparsers(dest="kind", required=True)
    gc = gsub.add_parser("cactus")
    gc.add_argument("n", type=int)
    gc.add_argument("cycles", type=int)
    gc.add_argument("--max-girth", type=int, default=6)
    gc.add_argument("--thread-bias", type=float, default=0.5)
    gc.add_argument("--seed", type=int, default=0)
    gt = gsub.add_parser("tree")
    gt.add_argument("n", type=int)
    gt.add_argument("--seed", type=int, default=0)
    ge = gsub.add_parser("extremal")
    ge.add_argument("b", type=int)
    ge.add_argument("c", type=int)
    gp.set_defaults(func=cmd_gen)

    z = sub.add_parser("zf", help="zero forcing number and the cycle-rank bounds")
    z.add_argument("input")
    z.add_argument("--limit", type=int, default=ZERO_FORCING_LIMIT)
    z.set_defaults(func=cmd_zf)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
