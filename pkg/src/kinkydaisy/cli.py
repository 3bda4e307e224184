"""Command-line interface.

Exit codes: 0 when every applicable check passes, 1 on a check failure,
2 on an input error (unreadable file, parse error, invalid system).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .cubes import (
    BitString,
    LabeledGraph,
    build_daisy_cube,
    downward_closure,
    hamming_one_pairs,
    is_daisy_cube,
    maximal_elements,
)
from .errors import BenzenoidError, InstanceParseError
from .genesis import MAX_ENUMERATE, canonical_key, chain_hexes, enumerate_shapes, fixtures
from .hexgrid import HexAddr, build_benzenoid, format_instance, parse_instance
from .report import FAIL, SKIPPED, analyze
from .resonance import build_digraph, build_resonance_graph, to_dot, to_json_dict
from .structure import inner_dual, is_kinky, order_hexagons

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _parse_root(text: str | None) -> HexAddr | None:
    if text is None:
        return None
    try:
        q, r = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"--root expects 'q,r', got {text!r}") from None
    return HexAddr(q, r)


def load_instance(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return build_benzenoid(parse_instance(text))


def parse_label_lines(text: str) -> list[BitString]:
    labels = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            labels.append(BitString.parse(line))
        except ValueError as exc:
            raise InstanceParseError(str(exc), lineno) from None
        if labels[0].n != labels[-1].n:
            raise InstanceParseError(
                f"label length {labels[-1].n} differs from {labels[0].n}", lineno
            )
    return labels


# --- subcommands ------------------------------------------------------------

def cmd_check(args) -> int:
    b = load_instance(args.instance)
    report = analyze(
        b,
        mode=args.order,
        root=_parse_root(args.root),
        force=args.force,
        median=args.median,
        timing=args.timing,
    )
    print(_dump(report))
    if not report["ok"]:
        return EXIT_FAIL
    if args.strict and any(c["status"] == SKIPPED and c.get("reason") == "not kinky"
                           for c in report["checks"].values()):
        return EXIT_FAIL
    return EXIT_OK


def cmd_resonance(args) -> int:
    b = load_instance(args.instance)
    ord = order_hexagons(inner_dual(b), args.order, _parse_root(args.root))
    rg = build_resonance_graph(b, ord)
    if args.digraph:
        rg = build_digraph(rg)
    if args.json:
        print(_dump(to_json_dict(rg, b if args.matchings else None, digraph=args.digraph)))
    else:
        sys.stdout.write(to_dot(rg, digraph=args.digraph))
    return EXIT_OK


def cmd_daisy(args) -> int:
    text = sys.stdin.read() if args.labels == "-" else Path(args.labels).read_text()
    labels = parse_label_lines(text)
    if args.closure:
        out = {"closure": sorted(str(x) for x in downward_closure(labels))}
        print(_dump(out))
        return EXIT_OK
    if args.generate:
        g = build_daisy_cube(labels)
    else:
        g = LabeledGraph(frozenset(labels), hamming_one_pairs(labels))
    verdict = is_daisy_cube(g)
    out = {
        "daisy_cube": verdict.ok,
        "maximal": sorted(str(x) for x in maximal_elements(g.vertices)),
        "vertices": len(g.vertices),
        "edges": len(g.edges),
    }
    if not verdict.ok:
        out["reason"] = verdict.reason
        out["witness"] = verdict.witness_str()
    print(_dump(out))
    return EXIT_OK if verdict.ok else EXIT_FAIL


def cmd_gen(args) -> int:
    if args.list_fixtures:
        print("\n".join(sorted(fixtures())))
        return EXIT_OK
    if args.fixture is not None:
        table = fixtures()
        if args.fixture not in table:
            print(f"unknown fixture {args.fixture!r}; try --list-fixtures", file=sys.stderr)
            return EXIT_INPUT
        sys.stdout.write(format_instance(table[args.fixture].hexes, args.fixture))
        return EXIT_OK
    if args.turns is not None:
        hexes = chain_hexes(args.turns)
        build_benzenoid(hexes)
        sys.stdout.write(format_instance(hexes, f"turns {args.turns or '(none)'}"))
        return EXIT_OK

    shapes = enumerate_shapes(args.enumerate)
    chunks = []
    for k, shape in enumerate(shapes):
        b = build_benzenoid(shape)
        if args.kinky and not is_kinky(b):
            continue
        key = canonical_key(shape)
        if args.out_dir:
            out = Path(args.out_dir)
            out.mkdir(parents=True, exist_ok=True)
            (out / f"n{args.enumerate}_{k:04d}.txt").write_text(format_instance(shape, key))
        else:
            chunks.append(format_instance(shape, key))
    if chunks:
        sys.stdout.write("\n".join(chunks))
    return EXIT_OK


def _verify_one(job):
    hexes, mode, root, median = job
    b = build_benzenoid(hexes)
    return analyze(b, mode=mode, root=root, median=median)


def _verify_jobs(args):
    rng = random.Random(args.seed)
    modes = ["dfs", "bfs"] if args.order == "both" else [args.order]
    jobs = []
    for n in range(1, args.max_hexes + 1):
        for shape in enumerate_shapes(n):
            b = build_benzenoid(shape)
            if args.kinky_only and not is_kinky(b):
                continue
            t = inner_dual(b)
            leaves = [t.nodes[i] for i in t.leaves()]
            roots = [None]
            if args.seed is not None and args.roots > 0:
                roots += rng.sample(leaves, min(args.roots, len(leaves)))
            for mode in modes:
                for root in roots:
                    jobs.append((shape, mode, root, args.median))
    return jobs


def cmd_verify(args) -> int:
    if not 1 <= args.max_hexes <= MAX_ENUMERATE:
        print(f"--max-hexes must be in 1..{MAX_ENUMERATE}", file=sys.stderr)
        return EXIT_INPUT
    jobs = _verify_jobs(args)
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            reports = list(pool.map(_verify_one, jobs, chunksize=8))
    else:
        reports = [_verify_one(j) for j in jobs]

    failures = []
    non_kinky = set()
    non_kinky_not_daisy = set()
    instances = set()
    for (shape, mode, root, _), rep in zip(jobs, reports):
        key = canonical_key(shape)
        instances.add(key)
        if not rep["instance"]["kinky"]:
            non_kinky.add(key)
            if not rep["observations"]["daisy_cube"]:
                non_kinky_not_daisy.add(key)
        bad = sorted(name for name, c in rep["checks"].items() if c["status"] == FAIL)
        if bad:
            failures.append({
                "instance": key,
                "order": mode,
                "root": rep["instance"]["root"],
                "failed": bad,
            })
    summary = {
        "schema": "kinkydaisy.verify/1",
        "max_hexes": args.max_hexes,
        "kinky_only": args.kinky_only,
        "order": args.order,
        "seed": args.seed,
        "instances": len(instances),
        "kinky_instances": len(instances - non_kinky),
        "runs": len(reports),
        "failures": sorted(failures, key=lambda f: (f["instance"], f["order"], f["root"])),
        "observations": {
            "non_kinky_instances": len(non_kinky),
            "non_kinky_not_daisy": len(non_kinky_not_daisy),
        },
    }
    if args.reports:
        summary["reports"] = sorted(
            reports, key=lambda r: (canonical_key(HexAddr(*h) for h in r["instance"]["hexes"]),
                                    r["instance"]["order"], r["instance"]["root"])
        )
    print(_dump(summary))
    return EXIT_FAIL if failures else EXIT_OK


# --- entry point ------------------------------------------------------------

def _add_order(p):
    p.add_argument("--order", choices=["dfs", "bfs"], default="dfs",
                   help="hexagon numbering (default: dfs)")
    p.add_argument("--root", metavar="Q,R", help="root leaf hexagon (default: smallest leaf)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kinkydaisy",
        description="Resonance graphs of catacondensed benzenoid systems and daisy cubes.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run every check on one instance")
    p.add_argument("instance", help="instance file ('q r' lines or JSON), '-' for stdin")
    _add_order(p)
    p.add_argument("--force", action="store_true",
                   help="run lemma and theorem checks on non-kinky systems")
    p.add_argument("--strict", action="store_true",
                   help="exit 1 when theorem checks are skipped for a non-kinky system")
    p.add_argument("--median", action="store_true", help="also check the median property")
    p.add_argument("--timing", action="store_true", help="include wall-clock time in the report")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("resonance", help="export the resonance graph")
    p.add_argument("instance")
    _add_order(p)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true", help="Graphviz DOT output (default)")
    fmt.add_argument("--json", action="store_true", help="JSON output")
    p.add_argument("--digraph", action="store_true", help="orient edges from 0-bit to 1-bit")
    p.add_argument("--matchings", action="store_true",
                   help="include each matching's edges in JSON output")
    p.set_defaults(func=cmd_resonance)

    p = sub.add_parser("daisy", help="daisy-cube test on a label file (one bit string per line)")
    p.add_argument("labels")
    p.add_argument("--closure", action="store_true", help="print the downward closure")
    p.add_argument("--generate", action="store_true",
                   help="test the daisy cube generated by the labels instead of the labels themselves")
    p.set_defaults(func=cmd_daisy)

    p = sub.add_parser("gen", help="generate instances")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--turns", help="chain from L/R/S turn letters")
    src.add_argument("--enumerate", type=int, metavar="N",
                     help=f"all catacondensed systems with N hexagons (N <= {MAX_ENUMERATE})")
    src.add_argument("--fixture", help="named instance")
    src.add_argument("--list-fixtures", action="store_true")
    p.add_argument("--kinky", action="store_true", help="with --enumerate: kinky systems only")
    p.add_argument("--out-dir", help="with --enumerate: write one file per instance")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check every enumerated instance")
    p.add_argument("--max-hexes", type=int, default=7)
    p.add_argument("--kinky-only", action="store_true")
    p.add_argument("--order", choices=["dfs", "bfs", "both"], default="dfs")
    p.add_argument("--seed", type=int, help="sample extra random root leaves with this seed")
    p.add_argument("--roots", type=int, default=3, help="random root leaves per instance (with --seed)")
    p.add_argument("--median", action="store_true")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--reports", action="store_true", help="include every per-run report")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BenzenoidError, OSError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
