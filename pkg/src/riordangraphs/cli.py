"""Command-line front end.

Subcommands: graph, metric, verify, scan, reproduce.  Exit codes:
0 = verified / no violations, 1 = mathematical discrepancy found,
2 = usage or resource error.  All output is line-oriented UTF-8.

An --aseq literal names the polynomial A(z) with those coefficients: it
is zero-extended on the right to whatever length the requested order
needs.  Library calls proper are stricter and never extend.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import analysis, search
from .errors import DisconnectedError, RiordanError, ScaleError, UsageError
from .riordan import ASequence
from .rgraph import (
    Graph,
    build_bell_aseq,
    catalan_graph,
    pascal_graph,
)
from .golden import (
    printed_cg6,
    printed_cg8_reverse,
    printed_counterexamples,
)

FAMILIES = ("catalan", "pascal")


def _extended_aseq(bits: str, length: int) -> ASequence:
    a = ASequence(bits)
    if len(a) >= length:
        return a
    return ASequence(list(a.bits) + [0] * (length - len(a)))


def _family_aseq(family: str, length: int) -> ASequence:
    if family == "catalan":
        return ASequence([1] * length)
    if family == "pascal":
        return ASequence([1, 1] + [0] * (length - 2))
    raise UsageError(f"unknown family {family!r}")


def _graph_from_args(args, n: int) -> Graph:
    chosen = [x for x in (args.family, args.g, args.aseq) if x]
    if len(chosen) != 1:
        raise UsageError("give exactly one of --family, --g, --aseq")
    if args.family:
        if args.family == "catalan":
            return catalan_graph(n)
        if args.family == "pascal":
            return pascal_graph(n)
        raise UsageError(f"unknown family {args.family!r}")
    if args.g:
        from .binseries import from_bitstring, named_series
        from .riordan import RiordanPair
        from .rgraph import build

        g = from_bitstring(args.g)
        need = max(n - 1, 1)
        if g.precision < need:
            g = from_bitstring(args.g + "0" * (need - g.precision))
        f = named_series("z", g.precision).mul(g)
        return build(RiordanPair(g, f), n)
    return build_bell_aseq(_extended_aseq(args.aseq, max(n - 1, 2)), n)


def _add_descriptor(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=FAMILIES, help="named graph family")
    p.add_argument("--g", metavar="BITS", help="g coefficients; Bell pair (g, zg)")
    p.add_argument("--aseq", metavar="BITS", help="binary A-sequence (a0 first)")
    p.add_argument("-n", type=int, required=True, help="graph order")


def _cmd_graph(args) -> int:
    G = _graph_from_args(args, args.n)
    if args.reverse:
        G = G.reverse_direct()
    if args.format == "dot":
        print(G.to_dot())
    elif args.format == "csv":
        print(G.edges_csv())
    elif args.format == "table":
        for v in range(1, G.n + 1):
            nb = " ".join(map(str, sorted(G.neighbors(v))))
            print(f"{v}: {nb}")
    else:
        for line in G.to_matrix_lines():
            print(line)
    return 0


def _cmd_metric(args) -> int:
    G = _graph_from_args(args, args.n)
    metric = args.metric[0]
    if metric == "diameter":
        try:
            print(G.diameter())
        except DisconnectedError as e:
            print(f"disconnected: no path between {e.pair[0]} and {e.pair[1]}",
                  file=sys.stderr)
            return 1
    elif metric == "distance":
        if len(args.metric) != 3:
            raise UsageError("usage: metric ... distance U V")
        d = G.distance(int(args.metric[1]), int(args.metric[2]))
        print("unreachable" if d is None else d)
    elif metric == "clique":
        print(G.max_clique_size(cap=args.clique_cap))
    elif metric == "colors":
        colors = G.io_coloring()
        print(len(set(colors)))
        classes: dict[int, list[int]] = {}
        for v, c in enumerate(colors, start=1):
            classes.setdefault(c, []).append(v)
        for c in sorted(classes):
            print(f"color {c}: {' '.join(map(str, classes[c]))}")
    elif metric == "universal":
        vs = sorted(G.universal_vertices())
        print(" ".join(map(str, vs)) if vs else "none")
    else:
        raise UsageError(f"unknown metric {metric!r}")
    return 0


def _verify_aseq(args, length: int) -> ASequence:
    if args.family and args.aseq:
        raise UsageError("give --family or --aseq, not both")
    if args.family:
        return _family_aseq(args.family, length)
    if args.aseq:
        return _extended_aseq(args.aseq, length)
    raise UsageError("this claim needs --family or --aseq")


def _cmd_verify(args) -> int:
    claim = args.claim
    if claim == "structural":
        a = _verify_aseq(args, max(args.nmax - 1, 2))
        report = analysis.verify_structural(a, args.nmax)
    elif claim == "fractal":
        n = args.n
        a = _verify_aseq(args, max(n - 1, 2))
        report = analysis.verify_fractal(a, args.s, args.alpha_max, n)
    elif claim == "catalan-diameters":
        report = analysis.verify_catalan_diameters(args.kmax)
    elif claim == "mixed-size":
        n = 1 + (1 << args.m) + sum(1 << (args.k + j) for j in range(args.s + 1))
        a = _verify_aseq(args, max(n - 1, 2))
        report = analysis.verify_mixed_size(args.k, args.m, args.s, a)
    elif claim == "monotonicity":
        a = _verify_aseq(args, max((1 << (args.k + args.mmax)) - 1, 2))
        report = analysis.verify_monotonicity(a, args.k, args.mmax)
    elif claim == "diameter-drop":
        a = _verify_aseq(args, max((1 << args.k) - 1, 2))
        report = analysis.verify_diameter_drop(a, args.k)
    else:
        raise UsageError(f"unknown claim {claim!r}")
    print(report.to_line())
    for note in report.notes:
        print(f"# {note}")
    return 1 if report.verdict == analysis.FAIL else 0


def _cmd_scan(args) -> int:
    jobs = args.jobs
    if args.conjecture == "1":
        sequences = None
        a_len = args.alen
        if args.aseq_ones is not None:
            sequences = [search.counterexample_family(max(args.nmax - 1, args.aseq_ones),
                                                      args.aseq_ones)]
        elif args.aseq is not None:
            sequences = [_extended_aseq(args.aseq, max(args.nmax - 1, 2))]
        elif a_len is None:
            raise UsageError("scan 1 needs --alen, --aseq or --aseq-ones")
        report = search.scan_conjecture1(
            args.nmax, a_len=a_len, sequences=sequences,
            budget=args.budget, jobs=jobs,
        )
    elif args.conjecture == "2":
        if args.k is None:
            raise UsageError("scan 2 needs -k")
        report = search.scan_conjecture2(
            args.k, sample=args.sample, seed=args.seed,
            budget=args.budget, jobs=jobs,
        )
    elif args.conjecture == "3":
        report = search.scan_conjecture3(args.nmax, budget=args.budget)
    else:
        raise UsageError(f"unknown conjecture {args.conjecture!r}")
    if args.violations_only:
        print(search.CSV_HEADER)
        for rec in report.violations:
            print(rec.to_csv())
    else:
        for line in report.to_csv_lines():
            print(line)
    summary = report.summary()
    print(
        f"# conjecture {report.conjecture}: {summary['records']} records, "
        f"{summary['violations']} violations",
        file=sys.stderr,
    )
    return 0 if report.passed else 1


def _diff_matrix(computed: list[str], printed: list[str]) -> list[str]:
    notes = []
    if computed == printed:
        notes.append("# match: computed matrix equals the printed one")
    else:
        for i, (a, b) in enumerate(zip(computed, printed), start=1):
            if a != b:
                notes.append(f"# row {i} differs: computed {a} printed {b}")
    return notes


def _cmd_reproduce(args) -> int:
    target = args.target
    if target == "counterexamples":
        rows = search.reproduce_counterexamples()
        printed = printed_counterexamples()
        print("n,diam_catalan,diam_g")
        for row in rows:
            print(",".join(map(str, row)))
        ok = rows == printed
        print(f"# {'match' if ok else 'MISMATCH'} against printed table "
              f"({len(rows)} rows)", file=sys.stderr)
        return 0 if ok else 1
    if target == "figure1":
        computed = catalan_graph(6).to_matrix_lines()
        for line in computed:
            print(line)
        notes = _diff_matrix(computed, printed_cg6())
        for note in notes:
            print(note)
        return 0 if computed == printed_cg6() else 1
    if target == "example-cg8r":
        computed = catalan_graph(8).reverse_direct().to_matrix_lines()
        for line in computed:
            print(line)
        notes = _diff_matrix(computed, printed_cg8_reverse())
        for note in notes:
            print(note)
        return 0 if computed == printed_cg8_reverse() else 1
    if target in ("table1", "table2"):
        t1, t2 = search.reproduce_tables()
        table = t1 if target == "table1" else t2
        print("aseq,diam,status,printed")
        for row in table.rows:
            printed = "|".join(map(str, row.printed)) if row.printed else "-"
            print(f"{row.aseq},{row.diam},{row.status},{printed}")
        for seq, times, values in table.duplicates:
            print(f"# printed duplicate: {seq} appears {times} times "
                  f"with values {sorted(set(values))}")
        for seq in table.omitted:
            print(f"# omitted from print: {seq}")
        for seq in table.foreign:
            print(f"# printed but outside the enumeration: {seq}")
        bad = table.genuine_mismatches
        if bad:
            print(f"# {len(bad)} genuine mismatches", file=sys.stderr)
            return 1
        return 0
    raise UsageError(f"unknown reproduce target {target!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="riordangraphs",
        description="Riordan graphs over GF(2): build, measure, verify, scan.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph", help="print a graph (matrix, DOT or edge CSV)")
    _add_descriptor(p)
    p.add_argument("--reverse", action="store_true", help="reverse relabelling")
    p.add_argument("--format", choices=("matrix", "dot", "csv", "table"), default="matrix")
    p.set_defaults(func=_cmd_graph)

    p = sub.add_parser("metric", help="diameter, distance, clique, colors, universal")
    _add_descriptor(p)
    p.add_argument("metric", nargs="+", help="diameter | distance U V | clique | colors | universal")
    p.add_argument("--clique-cap", type=int, default=64)
    p.set_defaults(func=_cmd_metric)

    p = sub.add_parser("verify", help="run one claim verifier")
    p.add_argument(
        "claim",
        choices=(
            "structural",
            "fractal",
            "catalan-diameters",
            "mixed-size",
            "monotonicity",
            "diameter-drop",
        ),
    )
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--aseq", metavar="BITS")
    p.add_argument("--nmax", type=int, default=64)
    p.add_argument("--kmax", type=int, default=6)
    p.add_argument("--n", type=int, default=33)
    p.add_argument("--s", type=int, default=0)
    p.add_argument("--alpha-max", type=int, default=3)
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--mmax", type=int, default=2)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("scan", help="scan one of the three conjectures")
    p.add_argument("conjecture", choices=("1", "2", "3"))
    p.add_argument("--nmax", type=int, default=100)
    p.add_argument("--alen", type=int, default=None)
    p.add_argument("--aseq", metavar="BITS", default=None)
    p.add_argument("--aseq-ones", type=int, default=None,
                   help="A(z) = 1 + z + ... + z^(N-1)")
    p.add_argument("-k", type=int, default=None)
    p.add_argument("--sample", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--violations-only", action="store_true")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--budget", type=int, default=search.DEFAULT_BUDGET)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("reproduce", help="recompute a published artifact and diff it")
    p.add_argument(
        "target",
        choices=("counterexamples", "table1", "table2", "figure1", "example-cg8r"),
    )
    p.set_defaults(func=_cmd_reproduce)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2
    try:
        return args.func(args)
    except ScaleError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except DisconnectedError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except RiordanError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
