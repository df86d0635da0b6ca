"""Command line driver.

Subcommands: build, verify, export, cliques, group, report.
Exit codes: 0 success, 1 certification or cache failure, 2 usage error.
All configuration is explicit flags; no environment variables are read.
"""

import argparse
import os
import sys

from . import cache as cache_mod
from . import cliques as cliques_mod
from . import exports, report
from .pipeline import build_all


def _add_common(p):
    p.add_argument("--cache", metavar="PATH", help="geometry cache file (JSON)")
    p.add_argument("--seed", type=int, default=report.DEFAULT_SEED,
                   help="seed for the generator search (default %(default)s)")
    p.add_argument("--jobs", type=int, default=1,
                   help="worker processes for the closure scan (default 1)")
    p.add_argument("--backend", choices=("auto", "pure", "compiled"),
                   default="auto", help="kernel backend (default auto)")


def _get_build(args, force_fresh: bool = False):
    backend = None if args.backend == "auto" else args.backend
    if not force_fresh and args.cache and os.path.exists(args.cache):
        return cache_mod.load_cache(args.cache)
    build = build_all(backend=backend, jobs=args.jobs)
    if args.cache:
        cache_mod.save_cache(args.cache, build)
    return build


def _cmd_build(args) -> int:
    build = _get_build(args, force_fresh=True)
    print(
        "built: %d points, %d lines, %d surface points, %d subquadrangles, "
        "%d ovoids, %d edges"
        % (
            len(build.space.points),
            len(build.space.lines),
            len(build.surface.points),
            len(build.subquadrangles),
            len(build.vertices),
            sum(build.graph.degrees) // 2,
        )
    )
    if args.cache:
        print("cache written to %s" % args.cache)
    return 0


def _cmd_verify(args) -> int:
    build = _get_build(args)
    backend = None if args.backend == "auto" else args.backend
    rep = report.run_certification(build, seed=args.seed, backend=backend)
    if args.json:
        sys.stdout.write(report.render_json(rep))
    else:
        sys.stdout.write(report.render_text(rep))
    return 0 if rep.passed else 1


def _cmd_report(args) -> int:
    build = _get_build(args)
    backend = None if args.backend == "auto" else args.backend
    rep = report.run_certification(build, seed=args.seed, backend=backend)
    text = report.render_json(rep) if args.json else report.render_text(rep)
    if args.output:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if rep.passed else 1


def _cmd_export(args) -> int:
    build = _get_build(args)
    data = exports.export_graph(build.graph, args.format)
    if args.output:
        with open(args.output, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
    return 0


def _cmd_cliques(args) -> int:
    build = _get_build(args)
    tris = cliques_mod.enumerate_maximal_cliques(build.graph)
    records, census = cliques_mod.classify_cliques(
        tris, build.subquadrangles, build.vertices
    )
    if args.output:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write("u,v,w,triple_meet\n")
            for r in records:
                fh.write("%d,%d,%d,%d\n" % (r.vertices + (r.triple_meet,)))
    print(
        "maximal cliques: %d total; %d with triple meet 6, %d with triple meet 2"
        % (len(records), census.get(6, 0), census.get(2, 0))
    )
    return 0


def _cmd_group(args) -> int:
    build = _get_build(args)
    expected, computed = report.group_summary(build, seed=args.seed)
    ok = expected == computed
    for key in sorted(computed):
        print("%s: %s" % (key, computed[key]))
    print("group certification: %s" % ("PASS" if ok else "FAIL"))
    return 0 if ok else 1


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="srg216",
        description="Exact construction and certification of the (216, 40, 4, 8) "
        "strongly regular graph from the Hermitian surface of PG(3,4).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="build the geometry and graph")
    _add_common(p_build)

    p_verify = sub.add_parser("verify", help="run the full certification suite")
    _add_common(p_verify)
    p_verify.add_argument("--all", action="store_true",
                          help="run every claim (the default; kept for clarity)")
    p_verify.add_argument("--json", action="store_true",
                          help="machine-readable report")

    p_report = sub.add_parser("report", help="write the certification report")
    _add_common(p_report)
    p_report.add_argument("--json", action="store_true",
                          help="machine-readable report")
    p_report.add_argument("-o", "--output", metavar="PATH",
                          help="write to a file instead of stdout")

    p_export = sub.add_parser("export", help="export the graph")
    _add_common(p_export)
    p_export.add_argument("--format", required=True, choices=exports.FORMATS)
    p_export.add_argument("-o", "--output", metavar="PATH",
                          help="write to a file instead of stdout")

    p_cliques = sub.add_parser("cliques", help="enumerate maximal cliques")
    _add_common(p_cliques)
    p_cliques.add_argument("-o", "--output", metavar="PATH",
                           help="write the full triple listing as CSV")

    p_group = sub.add_parser("group", help="certify the group action")
    _add_common(p_group)

    args = parser.parse_args(argv)
    handlers = {
        "build": _cmd_build,
        "verify": _cmd_verify,
        "report": _cmd_report,
        "export": _cmd_export,
        "cliques": _cmd_cliques,
        "group": _cmd_group,
    }
    try:
        return handlers[args.command](args)
    except cache_mod.CacheError as exc:
        print("cache error: %s" % exc, file=sys.stderr)
        return 1
    except (RuntimeError, ValueError) as exc:
        print("certification error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
