"""Command-line front end.

Subcommands: recognize, complete, oracle, gen, verify, xcheck.  Human-readable
text by default; ``--json`` switches to the documented envelope (see
docs/schema.json).  Exit codes: 0 success, 1 graph not in the required class
or verification rejected, 2 parse/input error, 3 oracle budget refusal.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from .caterpillar import caterpillar_pig_completion
from .errors import ClassMembershipError, GraphInputError, OracleBudgetError
from .generators import (
    GenSpec,
    gen_caterpillar,
    gen_quasi_threshold,
    gen_split,
    gen_threshold,
    split_pig_reduction_gadget,
)
from .graph import Graph, apply_fill, edge, sorted_edges
from .graphio import load_graph, parse_graph, serialize_graph
from .oracle import OracleBudget, brute_max_cut, brute_min_cobipartite, brute_min_pig
from .quasithreshold import qt_cobipartite_completion
from .recognition import (
    CaterpillarDecomposition,
    CreationSequence,
    PigVerdict,
    QtForest,
    SplitPartition,
    caterpillar_decomposition,
    is_proper_interval,
    quasi_threshold_forest,
    recognize_all,
    threshold_creation_sequence,
)
from .results import CliqueBipartition, CompletionResult, PointPlacement
from .threshold import threshold_pig_completion
from .xcheck import run_xcheck

SCHEMA_VERSION = 1


def _read_graph(path: str) -> Graph:
    if path == "-":
        return parse_graph(sys.stdin.read())
    return load_graph(path)


def _digest(g: Graph) -> str:
    return "sha256:" + hashlib.sha256(serialize_graph(g).encode()).hexdigest()


def _cert_json(cert) -> dict | None:
    if cert is None:
        return None
    if isinstance(cert, CreationSequence):
        return {"steps": [[v, t] for v, t in cert.steps]}
    if isinstance(cert, QtForest):
        return {"parents": list(cert.parent), "roots": list(cert.roots)}
    if isinstance(cert, CaterpillarDecomposition):
        return {"spine": list(cert.spine), "buckets": [list(b) for b in cert.buckets]}
    if isinstance(cert, SplitPartition):
        return {"clique": list(cert.clique), "independent": list(cert.independent)}
    if isinstance(cert, PigVerdict):
        return {
            "isProperInterval": cert.is_pig,
            "witnessKind": cert.witness_kind,
            "witness": list(cert.witness) if cert.witness else None,
        }
    raise TypeError(f"unexpected certificate {cert!r}")


def _envelope(g: Graph, result: CompletionResult, runtime_ms: float, sequence=None) -> dict:
    env: dict = {
        "schema_version": SCHEMA_VERSION,
        "input": {"digest": _digest(g), "n": g.n, "m": g.m},
        "algorithm": result.algorithm,
        "cost": result.cost,
        "fill_edges": [list(e) for e in sorted_edges(result.fill)] if result.fill is not None else None,
        "runtime_ms": round(runtime_ms, 3),
    }
    cert = result.certificate
    if isinstance(cert, CliqueBipartition):
        env["partition"] = {"s1": list(cert.s1), "s2": list(cert.s2)}
    elif isinstance(cert, PointPlacement):
        env["placement"] = {"spine": list(cert.spine), "points": [list(p) for p in cert.points]}
    if sequence is not None:
        env["sequence"] = _cert_json(sequence)
    if result.lower_bound_for:
        env["lower_bound_for"] = result.lower_bound_for
    return env


def _print_envelope_text(env: dict) -> None:
    print(f"algorithm    {env['algorithm']}")
    print(f"cost         {env['cost']}")
    if env.get("lower_bound_for"):
        print(f"lower bound  for {env['lower_bound_for']} (co-bipartite target, not PIG)")
    if env.get("fill_edges") is not None:
        shown = " ".join(f"{u}-{v}" for u, v in env["fill_edges"])
        print(f"fill         {shown if shown else '(none)'}")
    if "partition" in env:
        print(f"side 1       {env['partition']['s1']}")
        print(f"side 2       {env['partition']['s2']}")
    if "placement" in env:
        print(f"spine        {env['placement']['spine']}")
        print(f"leaf points  {env['placement']['points']}")
    print(f"runtime      {env['runtime_ms']} ms")


# ---------------------------------------------------------------------------
# subcommands


def _cmd_recognize(args) -> int:
    g = _read_graph(args.graph)
    report = recognize_all(g)
    out = {
        "schema_version": SCHEMA_VERSION,
        "input": {"digest": _digest(g), "n": g.n, "m": g.m},
        "classes": {
            "threshold": report["threshold"] is not None,
            "quasiThreshold": report["quasi_threshold"] is not None,
            "caterpillar": report["caterpillar"] is not None,
            "split": report["split"] is not None,
            "properInterval": report["proper_interval"].is_pig,
        },
        "mostSpecific": report["most_specific"],
        "certificates": {
            "threshold": _cert_json(report["threshold"]),
            "quasiThreshold": _cert_json(report["quasi_threshold"]),
            "caterpillar": _cert_json(report["caterpillar"]),
            "split": _cert_json(report["split"]),
            "properInterval": _cert_json(report["proper_interval"]),
        },
    }
    print(json.dumps(out, indent=2))
    return 0


def _cmd_complete(args) -> int:
    g = _read_graph(args.graph)
    algo = args.algo
    if algo == "auto":
        if threshold_creation_sequence(g) is not None:
            algo = "threshold"
        elif caterpillar_decomposition(g) is not None:
            algo = "caterpillar"
        elif quasi_threshold_forest(g) is not None:
            algo = "qt-cobipartite"
        elif g.n <= args.max_n:
            algo = "oracle"
        else:
            raise ClassMembershipError(
                "threshold, caterpillar or quasi-threshold (and too large for the oracle)"
            )
    start = time.perf_counter()
    sequence = None
    if algo == "threshold":
        result = threshold_pig_completion(g, cost_only=args.cost_only)
        sequence = threshold_creation_sequence(g)
    elif algo == "caterpillar":
        result = caterpillar_pig_completion(g)
    elif algo == "qt-cobipartite":
        result = qt_cobipartite_completion(g)
    elif algo == "oracle":
        cost, fill = brute_min_pig(g, OracleBudget(max_vertices=args.max_n), threads=args.threads)
        result = CompletionResult(fill, cost, None, "oracle")
    else:  # pragma: no cover - argparse restricts choices
        raise GraphInputError(f"unknown algorithm {algo!r}")
    runtime_ms = (time.perf_counter() - start) * 1000.0
    env = _envelope(g, result, runtime_ms, sequence)
    if args.json:
        print(json.dumps(env, indent=2))
    else:
        _print_envelope_text(env)
    return 0


def _cmd_oracle(args) -> int:
    g = _read_graph(args.graph)
    budget = OracleBudget(max_vertices=args.max_n) if args.max_n else None
    start = time.perf_counter()
    if args.solver == "pig":
        cost, fill = brute_min_pig(g, budget or OracleBudget(max_vertices=8), threads=args.threads)
        payload = {"cost": cost, "fill_edges": [list(e) for e in sorted_edges(fill)]}
    elif args.solver == "cobip":
        cost, parts = brute_min_cobipartite(g, budget)
        payload = {"cost": cost, "parts": [list(parts[0]), list(parts[1])]}
    else:
        size, parts = brute_max_cut(g, budget)
        payload = {"cut": size, "parts": [list(parts[0]), list(parts[1])]}
    runtime_ms = (time.perf_counter() - start) * 1000.0
    out = {
        "schema_version": SCHEMA_VERSION,
        "input": {"digest": _digest(g), "n": g.n, "m": g.m},
        "oracle": args.solver,
        "runtime_ms": round(runtime_ms, 3),
        **payload,
    }
    if args.json:
        print(json.dumps(out, indent=2))
    else:
        for key, value in payload.items():
            print(f"{key:12} {value}")
    return 0


def _cmd_gen(args) -> int:
    spec = GenSpec(
        klass=args.klass,
        n=args.n,
        seed=args.seed,
        p_dominating=args.p_dominating,
        spine_len=args.spine_len,
        max_leaves=args.max_leaves,
    )
    if args.klass == "threshold":
        g, cert = gen_threshold(args.n, args.p_dominating, args.seed)
    elif args.klass == "quasi-threshold":
        g, cert = gen_quasi_threshold(args.n, args.seed)
    elif args.klass == "caterpillar":
        g, cert = gen_caterpillar(args.spine_len, args.max_leaves, args.seed)
    elif args.klass == "split":
        g, cert = gen_split(args.n, args.seed)
    else:  # gadget
        if not args.input:
            raise GraphInputError("gen gadget needs --input with a connected split graph")
        base = _read_graph(args.input)
        gadget = split_pig_reduction_gadget(base)
        g = gadget.graph
        cert = gadget
    params = spec.params() if args.klass != "gadget" else {"class": "gadget", "input_digest": _digest(base)}
    sidecar = {
        "schema_version": SCHEMA_VERSION,
        "spec": params,
        "digest": _digest(g),
        "certificate": _gen_cert_json(cert),
    }
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(serialize_graph(g))
        with open(args.out + ".cert.json", "w", encoding="utf-8") as fh:
            json.dump(sidecar, fh, indent=2)
        print(f"wrote {args.out} and {args.out}.cert.json")
    elif args.json:
        print(json.dumps({"graph": serialize_graph(g), **sidecar}, indent=2))
    else:
        sys.stdout.write(serialize_graph(g))
    return 0


def _gen_cert_json(cert) -> dict | None:
    from .generators import GadgetResult

    if isinstance(cert, GadgetResult):
        return {
            "copyMaps": [list(m) for m in cert.copy_maps],
            "bigClique": list(cert.big_clique),
            "independentCopies": [list(m) for m in cert.independent_copies],
        }
    return _cert_json(cert)


def _cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    with open(args.fill, encoding="utf-8") as fh:
        data = json.load(fh)
    raw = data["fill_edges"] if isinstance(data, dict) else data
    try:
        fill = [edge(int(u), int(v)) for u, v in raw]
    except (TypeError, ValueError):
        raise GraphInputError("fill file must hold [[u, v], ...] pairs") from None
    problems = []
    for u, v in fill:
        if not (0 <= u < g.n and 0 <= v < g.n) or u == v:
            raise GraphInputError(f"fill edge ({u}, {v}) out of range")
        if g.has_edge(u, v):
            problems.append(f"({u}, {v}) is already an edge")
    verdict = None
    if not problems:
        verdict = is_proper_interval(apply_fill(g, fill))
        if not verdict.is_pig:
            problems.append(f"augmented graph is not proper interval ({verdict.witness_kind})")
    accepted = not problems
    out = {
        "schema_version": SCHEMA_VERSION,
        "input": {"digest": _digest(g), "n": g.n, "m": g.m},
        "fill_size": len(fill),
        "accepted": accepted,
        "problems": problems,
        "witness": list(verdict.witness) if verdict and verdict.witness else None,
    }
    if args.json:
        print(json.dumps(out, indent=2))
    else:
        print("accepted" if accepted else "rejected: " + "; ".join(problems))
    return 0 if accepted else 1


def _cmd_xcheck(args) -> int:
    rows = run_xcheck(args.klass, args.max_n)
    for row in rows:
        print(row.line())
    ok = all(row.ok for row in rows)
    print(f"{'all checks passed' if ok else 'CHECK FAILURES PRESENT'}")
    return 0 if ok else 1


# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pigfill",
        description="Proper-interval and co-bipartite completion toolkit for threshold graphs, caterpillars and quasi-threshold graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", help="report class membership and certificates as JSON")
    p.add_argument("graph", help="edge-list or DIMACS file, or - for stdin")
    p.set_defaults(fn=_cmd_recognize)

    p = sub.add_parser("complete", help="compute a minimum completion")
    p.add_argument("graph")
    p.add_argument(
        "--algo",
        choices=["auto", "threshold", "qt-cobipartite", "caterpillar", "oracle"],
        default="auto",
    )
    p.add_argument("--json", action="store_true")
    p.add_argument("--cost-only", action="store_true", help="skip materializing fill edges")
    p.add_argument("--max-n", type=int, default=8, help="oracle budget for --algo oracle/auto")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(fn=_cmd_complete)

    p = sub.add_parser("oracle", help="run a brute-force reference solver")
    p.add_argument("solver", choices=["pig", "cobip", "maxcut"])
    p.add_argument("graph")
    p.add_argument("--max-n", type=int, default=0, help="override the solver budget")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("gen", help="generate an instance plus its certificate sidecar")
    p.add_argument("klass", choices=["threshold", "quasi-threshold", "caterpillar", "split", "gadget"])
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p-dominating", type=float, default=0.5)
    p.add_argument("--spine-len", type=int, default=4)
    p.add_argument("--max-leaves", type=int, default=2)
    p.add_argument("--input", help="base split graph for klass=gadget")
    p.add_argument("--out", help="write <out> and <out>.cert.json")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("verify", help="check a claimed fill set")
    p.add_argument("graph")
    p.add_argument("--fill", required=True, help="JSON file with [[u, v], ...]")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("xcheck", help="run the oracle-equality suites")
    p.add_argument("--class", dest="klass", default="all",
                   choices=["threshold", "quasi-threshold", "caterpillar", "recognition", "all"])
    p.add_argument("--max-n", type=int, default=None)
    p.set_defaults(fn=_cmd_xcheck)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ClassMembershipError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OracleBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (GraphInputError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
