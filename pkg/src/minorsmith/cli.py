"""Command-line front end: queries, catalog, verification runs, sweeps.

Exit status contract: 0 success, 1 verification failure, 2 usage error.
Graph arguments accept graph6 or edge-list files, or ``builtin:NAME`` for a
catalog graph.  Reports land in --reports, $MINORSMITH_REPORTS, or ./reports,
as JSON plus a TSV summary and PNG figures.
"""

from __future__ import annotations

import argparse
import json
import os
import signal
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import lemmas
from .canon import automorphism_group, are_isomorphic, canonical_form
from .catalog import BUILTIN_NAMES, builtin, validate
from .errors import MinorsmithError, ParseError
from .formats import (
    graph_from_graph6,
    graph_to_edgelist,
    graph_to_graph6,
    load_graph,
)
from .graph import Graph, bridges, is_internally_4_connected, is_k_connected
from .minors import (
    has_minor,
    has_topological_minor,
    is_hamiltonian,
    verify_certificate,
    witness_to_dict,
)
from .splitter import enumerate_extensions


def _load_graph_arg(spec: str) -> Graph:
    if spec.startswith("builtin:"):
        return builtin(spec.split(":", 1)[1]).graph
    return load_graph(spec)


def _reports_dir(args) -> Path:
    d = args.reports or os.environ.get("MINORSMITH_REPORTS") or "reports"
    path = Path(d)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _dump_json(path: Path, obj) -> None:
    path.write_text(json.dumps(obj, indent=1, sort_keys=True) + "\n")


# ---------------------------------------------------------------------------
# Simple query commands


def _cmd_minor(args) -> int:
    host = _load_graph_arg(args.host)
    pattern = _load_graph_arg(args.pattern)
    cert = has_minor(host, pattern)
    if cert is None:
        print("no minor")
    else:
        ok = verify_certificate(host, cert, pattern)
        print(f"minor found (certificate {'verified' if ok else 'INVALID'})")
        if args.json:
            _dump_json(Path(args.json), witness_to_dict(cert))
        if not ok:
            return 1
    return 0


def _cmd_topo(args) -> int:
    host = _load_graph_arg(args.host)
    pattern = _load_graph_arg(args.pattern)
    sub = has_topological_minor(host, pattern)
    if sub is None:
        print("no topological minor")
    else:
        ok = verify_certificate(host, sub, pattern)
        print(f"subdivision found (certificate {'verified' if ok else 'INVALID'})")
        if args.json:
            _dump_json(Path(args.json), witness_to_dict(sub))
        if not ok:
            return 1
    return 0


def _cmd_hamilton(args) -> int:
    g = _load_graph_arg(args.graph)
    cycle = is_hamiltonian(g)
    if cycle is None:
        print("non-hamiltonian")
    else:
        print("hamiltonian:", " ".join(str(v) for v in cycle.order))
        if args.json:
            _dump_json(Path(args.json), witness_to_dict(cycle))
    return 0


def _cmd_connectivity(args) -> int:
    g = _load_graph_arg(args.graph)
    verdict = is_k_connected(g, args.k)
    print(f"{args.k}-connected: {'yes' if verdict else 'no'}")
    if args.internal:
        print(f"internally 4-connected: {'yes' if is_internally_4_connected(g) else 'no'}")
    return 0


def _cmd_aut(args) -> int:
    g = _load_graph_arg(args.graph)
    ag = automorphism_group(g)
    print(f"order: {ag.order}")
    print(f"canonical: {ag.canonical_form}")
    for gen in ag.generators:
        print("generator:", " ".join(str(x) for x in gen))
    return 0


def _cmd_iso(args) -> int:
    a = _load_graph_arg(args.graph_a)
    b = _load_graph_arg(args.graph_b)
    print("isomorphic" if are_isomorphic(a, b) else "not isomorphic")
    return 0


def _cmd_split_enum(args) -> int:
    g = _load_graph_arg(args.graph)
    exts = enumerate_extensions(g)
    adds = [e for e in exts if e[0].kind == "add_edge"]
    splits = [e for e in exts if e[0].kind == "split"]
    print(f"{len(exts)} extension classes ({len(adds)} edge additions, {len(splits)} splits)")
    for step, h in exts:
        print(json.dumps(step.describe(), sort_keys=True))
    return 0


def _cmd_bridges(args) -> int:
    g = _load_graph_arg(args.graph)
    anchor = [int(x) for x in args.anchor.split(",") if x != ""]
    for br in bridges(g, anchor):
        print(f"interior={sorted(br.interior)} attachments={sorted(br.attachments)}")
    return 0


def _cmd_convert(args) -> int:
    g = _load_graph_arg(args.graph)
    if args.to_edgelist:
        sys.stdout.write(graph_to_edgelist(g))
    else:
        print(graph_to_graph6(g))
    return 0


def _cmd_catalog(args) -> int:
    if args.action == "list":
        for name in BUILTIN_NAMES:
            print(name)
        return 0
    if args.action == "show":
        ng = builtin(args.name)
        g = ng.graph
        print(f"{ng.name}: n={g.n} m={g.m} degrees={g.degree_sequence()}")
        print("graph6:", graph_to_graph6(g))
        for label, v in sorted(ng.labels.items(), key=lambda kv: kv[1]):
            print(f"  {label} -> {v}")
        return 0
    names = [args.name] if args.name else [n for n in BUILTIN_NAMES if "(" not in n]
    bad = 0
    for name in names:
        rep = validate(builtin(name))
        status = "PASS" if rep.passed else "FAIL"
        print(f"{status} {name}: {len(rep.outcomes)} claims")
        for o in rep.failures():
            bad += 1
            print(f"   FAIL {o.case_id}: {o.detail}")
    return 1 if bad else 0


# ---------------------------------------------------------------------------
# verify


def _cmd_verify(args) -> int:
    paths = lemmas.DataPaths(
        archdeacon=Path(args.archdeacon) if args.archdeacon else None,
        small_graphs=Path(args.corpus) if args.corpus else None,
    )
    if args.all:
        reports = lemmas.verify_all(jobs=args.jobs, include_slow=not args.skip_slow,
                                    paths=paths)
    else:
        if not args.statement:
            print("verify: need a STATEMENT id or --all", file=sys.stderr)
            return 2
        reports = [lemmas.verify(args.statement, paths)]
    outdir = _reports_dir(args)
    index = []
    for rep in reports:
        _dump_json(outdir / f"{rep.statement_id}.json", rep.to_dict())
        index.append({
            "statement_id": rep.statement_id,
            "status": rep.status,
            "cases_total": rep.cases_total,
            "cases_up_to_symmetry": rep.cases_up_to_symmetry,
            "failures": len(rep.failures()),
            "elapsed_s": round(rep.elapsed_s, 3),
        })
        sym = "" if rep.cases_up_to_symmetry is None else f" ({rep.cases_up_to_symmetry} up to symmetry)"
        print(f"{rep.status.upper():12s} {rep.statement_id}: "
              f"{rep.cases_total} cases{sym}, "
              f"{len(rep.failures())} failures, {rep.elapsed_s:.1f}s")
        for o in rep.failures()[:10]:
            print(f"    FAIL {o.case_id}: {o.detail}")
    _dump_json(outdir / "index.json", {"schema": "minorsmith.report/1", "statements": index})
    with (outdir / "summary.tsv").open("w") as fh:
        fh.write("statement_id\tstatus\tcases_total\tcases_up_to_symmetry\tfailures\telapsed_s\n")
        for row in index:
            fh.write("\t".join(str(row[k]) for k in (
                "statement_id", "status", "cases_total", "cases_up_to_symmetry",
                "failures", "elapsed_s")) + "\n")
    if not args.no_figures:
        _render_figures(reports, outdir)
    failed = [r for r in reports if r.status == "fail"]
    missing = [r for r in reports if r.status == "data-missing"]
    if failed:
        print(f"{len(failed)} statement(s) FAILED")
        return 1
    if missing:
        print(f"all evaluated statements passed; {len(missing)} data-missing")
        return 0
    print("all statements passed")
    return 0


def _render_figures(reports, outdir: Path) -> None:
    from . import figures

    stmts = {s.id: s for s in lemmas.registry()}
    for rep in reports:
        stmt = stmts.get(rep.statement_id)
        base = builtin(stmt.base) if stmt and stmt.base else None
        figures.statement_figure(rep, base, outdir / f"{rep.statement_id}.png")
    figures.index_figure(reports, outdir / "index.png")


# ---------------------------------------------------------------------------
# sweep


@dataclass
class SweepSpec:
    source: str
    connectivity: int = 0
    internally_4_connected: bool = False
    non_hamiltonian: bool = False
    min_order: int = 0
    max_order: int = 64
    check: list = field(default_factory=list)
    budget: float = 10.0
    jobs: int = 1


class _Timeout(Exception):
    pass


def _alarm_handler(signum, frame):
    raise _Timeout()


_SWEEP_PATTERNS = {}


def _sweep_one(task):
    idx, line, spec_dict = task
    spec = SweepSpec(**spec_dict)
    try:
        g = graph_from_graph6(line)
    except ParseError as exc:
        return (idx, "parse-error", str(exc))
    if not (spec.min_order <= g.n <= spec.max_order):
        return (idx, "filtered-out", "")
    if spec.connectivity and not is_k_connected(g, spec.connectivity):
        return (idx, "filtered-out", "")
    old = None
    try:
        if spec.budget > 0 and hasattr(signal, "setitimer"):
            old = signal.signal(signal.SIGALRM, _alarm_handler)
            signal.setitimer(signal.ITIMER_REAL, spec.budget)
        if spec.internally_4_connected and not is_internally_4_connected(g):
            return (idx, "filtered-out", "")
        if spec.non_hamiltonian and is_hamiltonian(g) is not None:
            return (idx, "filtered-out", "")
        for name in spec.check:
            if name not in _SWEEP_PATTERNS:
                _SWEEP_PATTERNS[name] = builtin(name).graph
            pat = _SWEEP_PATTERNS[name]
            cert = has_minor(g, pat)
            if cert is not None and verify_certificate(g, cert, pat):
                return (idx, "passed", name)
        return (idx, "failed", line)
    except _Timeout:
        return (idx, "timed-out", line)
    finally:
        if old is not None:
            signal.setitimer(signal.ITIMER_REAL, 0)
            signal.signal(signal.SIGALRM, old)


def run_sweep(spec: SweepSpec):
    """Apply the filters and required-minor check to every stream record.

    The outcome counts are independent of record order and worker count;
    failures are reported with their graph6 text verbatim.
    """
    if spec.source == "-":
        lines = [ln.strip() for ln in sys.stdin.read().splitlines() if ln.strip()]
    else:
        lines = [ln.strip() for ln in Path(spec.source).read_text().splitlines()
                 if ln.strip()]
    spec_dict = dict(spec.__dict__)
    tasks = [(i, ln, spec_dict) for i, ln in enumerate(lines)]
    if spec.jobs > 1:
        import multiprocessing as mp

        with mp.Pool(spec.jobs) as pool:
            results = pool.map(_sweep_one, tasks, chunksize=64)
    else:
        results = [_sweep_one(t) for t in tasks]
    results.sort()
    counts = {"scanned": len(lines), "filtered_in": 0, "passed": 0,
              "failed": 0, "timed_out": 0}
    failures = []
    timeouts = []
    for idx, status, payload in results:
        if status == "parse-error":
            raise ParseError(payload, line=idx + 1)
        if status == "filtered-out":
            continue
        counts["filtered_in"] += 1
        if status == "passed":
            counts["passed"] += 1
        elif status == "timed-out":
            counts["timed_out"] += 1
            timeouts.append(payload)
        else:
            counts["failed"] += 1
            failures.append(payload)
    return counts, failures, timeouts


def _cmd_sweep(args) -> int:
    spec = SweepSpec(
        source=args.source,
        connectivity=args.connectivity,
        internally_4_connected=args.internally_4_connected,
        non_hamiltonian=args.non_hamiltonian,
        min_order=args.min_order,
        max_order=args.max_order,
        check=[s for part in args.check for s in part.split(",") if s],
        budget=args.budget,
        jobs=args.jobs,
    )
    t0 = time.time()
    counts, failures, timeouts = run_sweep(spec)
    elapsed = time.time() - t0
    print(f"scanned={counts['scanned']} filtered_in={counts['filtered_in']} "
          f"passed={counts['passed']} failed={counts['failed']} "
          f"timed_out={counts['timed_out']} ({elapsed:.1f}s)")
    for g6 in failures:
        print("FAILED", g6)
    for g6 in timeouts:
        print("TIMED-OUT", g6)
    outdir = _reports_dir(args)
    _dump_json(outdir / "sweep.json", {
        "schema": "minorsmith.report/1",
        "spec": {k: v for k, v in spec.__dict__.items()},
        "counts": counts,
        "failures": failures,
        "timeouts": timeouts,
        "elapsed_s": round(elapsed, 3),
    })
    if not args.no_figures:
        from . import figures

        figures.sweep_figure(counts, outdir / "sweep.png")
    return 1 if failures else 0


# ---------------------------------------------------------------------------
# parser


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="minorsmith",
                                description="graph-minor engine and certification harness")
    sub = p.add_subparsers(dest="command", required=True)

    def graphish(sp, name, help_):
        sp.add_argument(name, help=help_ + " (graph6/edge-list file or builtin:NAME)")

    sp = sub.add_parser("minor", help="minor containment with certificate")
    graphish(sp, "host", "host graph")
    graphish(sp, "pattern", "pattern graph")
    sp.add_argument("--json", help="write the witness JSON here")
    sp.set_defaults(fn=_cmd_minor)

    sp = sub.add_parser("topo", help="topological-minor containment")
    graphish(sp, "host", "host graph")
    graphish(sp, "pattern", "pattern graph")
    sp.add_argument("--json")
    sp.set_defaults(fn=_cmd_topo)

    sp = sub.add_parser("hamilton", help="Hamilton cycle search")
    graphish(sp, "graph", "graph")
    sp.add_argument("--json")
    sp.set_defaults(fn=_cmd_hamilton)

    sp = sub.add_parser("connectivity", help="k-connectivity test")
    graphish(sp, "graph", "graph")
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("--internal", action="store_true",
                    help="also test internal 4-connectivity")
    sp.set_defaults(fn=_cmd_connectivity)

    sp = sub.add_parser("aut", help="automorphism group and canonical form")
    graphish(sp, "graph", "graph")
    sp.set_defaults(fn=_cmd_aut)

    sp = sub.add_parser("iso", help="isomorphism test")
    graphish(sp, "graph_a", "first graph")
    graphish(sp, "graph_b", "second graph")
    sp.set_defaults(fn=_cmd_iso)

    sp = sub.add_parser("split-enum", help="one-step splitter extensions up to isomorphism")
    graphish(sp, "graph", "graph")
    sp.set_defaults(fn=_cmd_split_enum)

    sp = sub.add_parser("bridges", help="bridges of a vertex set")
    graphish(sp, "graph", "graph")
    sp.add_argument("--anchor", required=True, help="comma-separated vertex set")
    sp.set_defaults(fn=_cmd_bridges)

    sp = sub.add_parser("catalog", help="built-in graph catalog")
    sp.add_argument("action", choices=["list", "show", "validate"])
    sp.add_argument("name", nargs="?")
    sp.set_defaults(fn=_cmd_catalog)

    sp = sub.add_parser("verify", help="run lemma-suite statements")
    sp.add_argument("statement", nargs="?")
    sp.add_argument("--all", action="store_true")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--reports")
    sp.add_argument("--skip-slow", action="store_true")
    sp.add_argument("--no-figures", action="store_true")
    sp.add_argument("--archdeacon", help="path to the 23-graph collection JSON")
    sp.add_argument("--corpus", help="path to the small-graph graph6 corpus")
    sp.set_defaults(fn=_cmd_verify)

    sp = sub.add_parser("sweep", help="filtered minor check over a graph6 stream")
    sp.add_argument("--source", required=True, help="graph6 file or - for stdin")
    sp.add_argument("--connectivity", type=int, default=0)
    sp.add_argument("--internally-4-connected", action="store_true")
    sp.add_argument("--non-hamiltonian", action="store_true")
    sp.add_argument("--min-order", type=int, default=0)
    sp.add_argument("--max-order", type=int, default=64)
    sp.add_argument("--check", action="append", default=[],
                    help="required minor(s), comma-separated catalog names")
    sp.add_argument("--budget", type=float, default=10.0,
                    help="per-graph wall-clock budget in seconds")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--reports")
    sp.add_argument("--no-figures", action="store_true")
    sp.set_defaults(fn=_cmd_sweep)

    sp = sub.add_parser("convert", help="re-encode a graph")
    graphish(sp, "graph", "graph")
    fmt = sp.add_mutually_exclusive_group()
    fmt.add_argument("--to-graph6", action="store_true")
    fmt.add_argument("--to-edgelist", action="store_true")
    sp.set_defaults(fn=_cmd_convert)

    return p


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.fn(args)
    except (MinorsmithError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
