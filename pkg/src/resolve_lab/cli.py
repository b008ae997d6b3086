"""``resolve-lab`` command line.

Every command builds a report ``{command, inputs, results, status,
elapsed_ms}``.  Exit codes: 0 all checks passed, 1 a theory-backed check
failed (VIOLATION), 2 bad input or usage (ERROR).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import characterize as ch
from .constructions import (
    ConstructionError,
    build_A,
    build_D_box,
    build_H,
    build_I,
    build_J,
    ft_bound,
    ft_construct,
)
from .ek import (
    SEARCH_MAX_K,
    TheoremViolation,
    ek_bruteforce,
    family_to_graph,
    family_to_text,
    verify_mc_ek,
)
from .graph import GraphFormatError, clique_number, graph_to_graph6, read_graph, write_graph
from .resolve import (
    EDGE_METRIC,
    InfeasibleError,
    has_resolving_set_of_size,
    is_fault_tolerant,
    is_resolving,
    min_fault_tolerant,
    min_resolving,
    parse_variant,
)

OK, VIOLATION, ERROR = "OK", "VIOLATION", "ERROR"
EXIT = {OK: 0, VIOLATION: 1, ERROR: 2}
MAX_LISTED = 20


class UsageError(ValueError):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


# ---------------------------------------------------------------- commands


def cmd_dim(args) -> tuple[dict, str]:
    g = read_graph(args.input, args.format)
    v = parse_variant(args.variant)
    size, S = (min_fault_tolerant if args.ft else min_resolving)(g, v)
    if args.ft:
        cert = is_fault_tolerant(g, v, S) if g.n else None
    else:
        cert = is_resolving(g, v, S)
    verified = True if cert is None else bool(cert)
    results = {
        "n": g.n,
        "m": g.m,
        "variant": v.name,
        "fault_tolerant": args.ft,
        "dimension": size,
        "witness": S,
        "certificate_ok": verified,
    }
    return results, OK if verified else VIOLATION


def _build_family(args):
    k = args.k
    if args.family == "J":
        return build_J(k)
    if args.family == "H":
        return build_H(k)
    if args.family == "A":
        return build_A(k)
    if args.family == "I":
        if args.q is None:
            raise UsageError("family I needs --q")
        return build_I(k, args.q)
    if args.lo is None or args.hi is None:
        raise UsageError("family Dbox needs --lo and --hi")
    return build_D_box(k, _int_list(args.lo), _int_list(args.hi))


def cmd_gen(args) -> tuple[dict, str]:
    if args.k is None or args.k < 1:
        raise UsageError("--k must be a positive integer")
    fam = _build_family(args)
    if args.out:
        write_graph(fam.graph, args.out, args.format)
    if args.labels:
        with open(args.labels, "w") as fh:
            fh.write(fam.label_lines())
    results = {
        "family": args.family,
        "n": fam.graph.n,
        "m": fam.graph.m,
        "landmarks": fam.landmarks,
        "landmark_labels": [fam.labels[s] for s in fam.landmarks],
        "graph6": graph_to_graph6(fam.graph),
        "out": args.out,
        "labels": args.labels,
    }
    return results, OK


def cmd_ftbuild(args) -> tuple[dict, str]:
    g = read_graph(args.input, args.format)
    v = parse_variant(args.variant)
    S = _int_list(args.set)
    try:
        out = ft_construct(g, v, S)
    except ConstructionError as exc:
        return {"set": S, "error": str(exc)}, VIOLATION
    bound = ft_bound(v, len(S))
    ft_ok = bool(is_fault_tolerant(g, v, out))
    results = {
        "variant": v.name,
        "set": S,
        "fault_tolerant_set": out,
        "size": len(out),
        "bound": bound,
        "fault_tolerant": ft_ok,
    }
    return results, OK if ft_ok and len(out) <= bound else VIOLATION


def _suite_results(checks) -> tuple[dict, str]:
    rows = []
    for c in checks:
        d = c.to_dict()
        key = "mismatches" if "mismatches" in d else "violations"
        d[key + "_count"] = len(d[key])
        d[key] = d[key][:MAX_LISTED]
        d["ok"] = c.ok
        rows.append(d)
    passed = sum(1 for c in checks if c.ok)
    results = {"checks": rows, "passed": passed, "failed": len(checks) - passed}
    return results, OK if passed == len(checks) else VIOLATION


def cmd_verify(args) -> tuple[dict, str]:
    suite = args.suite
    n = args.max_n
    k = args.k
    if n is not None and not 1 <= n <= ch.MAX_SUITE_ORDER:
        raise UsageError(f"--max-n must be between 1 and {ch.MAX_SUITE_ORDER}")
    if k is not None and not 1 <= k <= 3:
        raise UsageError("--k must be between 1 and 3")
    if suite == "characterizations":
        return _suite_results(ch.characterization_suite(n or 5))
    if suite == "degree":
        ks = range(2, (k or 3) + 1)
        return _suite_results(ch.degree_suite(n or 6, ks))
    if suite == "lower-bounds":
        return _suite_results(ch.lower_bound_suite(k or 3))
    if suite == "upper-bounds":
        return _suite_results(
            ch.upper_bound_suite(n or 6, sample_order=7 if args.sample else None, sample_size=args.sample)
        )
    rep = verify_mc_ek(k or 2, n or 6)
    return rep.to_dict(), OK if rep.ok else VIOLATION


def cmd_ek(args) -> tuple[dict, str]:
    if not 1 <= args.k <= SEARCH_MAX_K:
        raise UsageError(f"--k must be between 1 and {SEARCH_MAX_K}")
    value, F = ek_bruteforce(args.k, strict=args.strict)
    results = {
        "k": args.k,
        "strict": args.strict,
        "ek": value,
        "witness": [sorted(s) for s in F.as_sets()],
    }
    if args.family_out:
        with open(args.family_out, "w") as fh:
            fh.write(family_to_text(F))
        results["family_out"] = args.family_out
    status = OK
    if args.construct_graph:
        if args.strict:
            raise UsageError("--construct-graph uses the default (non-strict) family")
        fg = family_to_graph(F)
        write_graph(fg.graph, args.construct_graph, args.format)
        edim_ok = has_resolving_set_of_size(fg.graph, EDGE_METRIC, args.k) is not None
        omega = clique_number(fg.graph)
        results.update(
            graph=args.construct_graph,
            landmarks=fg.landmarks,
            clique=omega,
            edim_at_most_k=edim_ok,
        )
        if not edim_ok or omega < value:
            status = VIOLATION
    return results, status


# ---------------------------------------------------------------- plumbing


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="resolve-lab", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the JSON report")
    common.add_argument("--no-timing", action="store_true", help="report elapsed_ms as null")
    common.add_argument("--format", choices=("el", "g6"), help="graph file format (default: by extension)")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("dim", parents=[common], help="exact (fault-tolerant) dimension")
    d.add_argument("--input", required=True)
    d.add_argument("--variant", default="metric", help="metric | edge | local | adim | trunc=K")
    d.add_argument("--ft", action="store_true", help="fault-tolerant dimension")
    d.set_defaults(func=cmd_dim)

    g = sub.add_parser("gen", parents=[common], help="build an extremal family")
    g.add_argument("--family", required=True, choices=("J", "H", "A", "I", "Dbox"))
    g.add_argument("--k", type=int)
    g.add_argument("--q", type=int)
    g.add_argument("--lo")
    g.add_argument("--hi")
    g.add_argument("--out")
    g.add_argument("--labels")
    g.set_defaults(func=cmd_gen)

    f = sub.add_parser("ftbuild", parents=[common], help="fault-tolerant set from a resolving set")
    f.add_argument("--input", required=True)
    f.add_argument("--variant", default="metric")
    f.add_argument("--set", required=True, help='comma-separated landmarks, e.g. "0,3"')
    f.set_defaults(func=cmd_ftbuild)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument(
        "--suite", required=True,
        choices=("characterizations", "degree", "lower-bounds", "upper-bounds", "ek"),
    )
    v.add_argument("--max-n", type=int)
    v.add_argument("--k", type=int)
    v.add_argument("--sample", type=int, default=1000, help="random connected order-7 graphs (upper-bounds)")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("ek", parents=[common], help="largest union-distinct family")
    e.add_argument("--k", type=int, required=True)
    e.add_argument("--strict", action="store_true", help="also forbid a union equal to a member")
    e.add_argument("--family-out")
    e.add_argument("--construct-graph")
    e.set_defaults(func=cmd_ek)
    return p


def _inputs(args) -> dict:
    skip = {"func", "json", "no_timing", "command"}
    return {k: v for k, v in vars(args).items() if k not in skip}


def _print_table(report: dict, out) -> None:
    print(f"{report['command']}: {report['status']}", file=out)
    results = report["results"]
    if "checks" in results:
        for c in results["checks"]:
            name = c.get("check", "")
            if "variant" in c:
                name = f"{name} [{c['variant']}]"
            count = c.get("mismatches_count", c.get("violations_count", 0))
            checked = c.get("graphs_checked", c.get("checked", 0))
            print(f"  {'PASS' if c['ok'] else 'FAIL'}  {name}  checked={checked} failures={count}", file=out)
        print(f"  passed {results['passed']}, failed {results['failed']}", file=out)
        return
    for key, value in results.items():
        print(f"  {key}: {value}", file=out)
    if report["elapsed_ms"] is not None:
        print(f"  elapsed_ms: {report['elapsed_ms']}", file=out)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        results, status = args.func(args)
    except (TheoremViolation, ConstructionError) as exc:
        results, status = {"error": str(exc)}, VIOLATION
    except (GraphFormatError, InfeasibleError, UsageError, ValueError, OSError) as exc:
        results, status = {"error": str(exc)}, ERROR
    elapsed = None if args.no_timing else round((time.perf_counter() - start) * 1000, 3)
    report = {
        "command": args.command,
        "inputs": _inputs(args),
        "results": results,
        "status": status,
        "elapsed_ms": elapsed,
    }
    if args.json:
        json.dump(report, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        _print_table(report, sys.stdout)
    return EXIT[status]


if __name__ == "__main__":
    sys.exit(main())
