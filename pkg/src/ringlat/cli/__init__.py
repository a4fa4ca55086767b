"""Command-line interface: ``ringlat analyze|lattice|corpus|fuzz|export``.

Exit status: 0 when everything checked passes, 1 on a failed expectation,
route disagreement or law violation, 2 on unusable input.
"""
import argparse
import json
import sys
from pathlib import Path

from ..analysis import Analysis
from ..corpus import NAMES, build, check_item
from ..corpus.catalogue import STANDARD
from ..corpus.fuzz import DEFAULT_MAX_NODES, fuzz_instance
from ..corpus.invariants import LAWS, check_laws
from ..errors import RingLatError
from .render import (
    cover_rows,
    node_rows,
    render_dot,
    render_markdown,
    render_text,
    render_tsv,
)
from .specfile import SpecError, dump_spec, read_spec, spec_from_extension

OK, FAILED, BAD_INPUT = 0, 1, 2


class UsageError(RingLatError):
    """A command-line argument names something that does not exist."""


def _emit(text, out):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _check_expected(a, expected):
    unknown = sorted(set(expected) - set(STANDARD))
    if unknown:
        raise SpecError(f"unknown expectation keys {unknown}; allowed: {sorted(STANDARD)}")
    rows = []
    for key in sorted(expected):
        got = STANDARD[key](a)
        rows.append((key, expected[key], got, got == expected[key]))
    return rows


def _write_tables(a, directory):
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    (d / "nodes.tsv").write_text(render_tsv(node_rows(a)), encoding="utf-8")
    (d / "covers.tsv").write_text(render_tsv(cover_rows(a)), encoding="utf-8")


def cmd_analyze(args):
    spec = read_spec(args.spec)
    a = Analysis(spec.extension())
    expectations = _check_expected(a, spec.expected) if spec.expected else None
    render = render_markdown if args.format == "markdown" else render_text
    _emit(render(a, expectations), args.out)
    if args.tables:
        _write_tables(a, args.tables)
    if args.figure:
        from .figure import hasse_figure

        hasse_figure(a, args.figure)
    if not a.routes_agree:
        return FAILED
    if args.assert_expected and expectations and not all(r[-1] for r in expectations):
        return FAILED
    return OK


def cmd_lattice(args):
    spec = read_spec(args.spec)
    a = Analysis(spec.extension())
    _emit(render_dot(a), args.dot)
    return OK


def _reproduction(E, witness):
    text = dump_spec(spec_from_extension(E))
    return text + "witness: " + json.dumps(witness, sort_keys=True, default=str) + "\n"


def cmd_corpus(args):
    names = args.only or list(NAMES)
    for n in names:
        if n not in NAMES:
            raise UsageError(f"unknown corpus item {n!r}; known: {', '.join(NAMES)}")
    rows = []
    failed = 0
    for n in names:
        item = build(n)
        a = Analysis(item.extension)
        result = check_item(item, a)
        for key, source, want, got, ok in result.rows:
            rows.append({"item": n, "check": key, "source": source,
                         "expected": repr(want), "got": repr(got), "result": "PASS" if ok else "FAIL"})
        rows.append({"item": n, "check": "routes_agree", "source": "oracle",
                     "expected": "True", "got": repr(result.routes_agree),
                     "result": "PASS" if result.routes_agree else "FAIL"})
        status = "PASS" if result.ok else "FAIL"
        print(f"{status} {n}: {sum(r[-1] for r in result.rows)}/{len(result.rows)} checks, "
              f"nodes {len(a.lattice)}, delta {str(a.delta).lower()}")
        if not result.ok:
            failed += 1
            bad = [{"check": r[0], "expected": r[2], "got": r[3]} for r in result.rows if not r[-1]]
            print(_reproduction(item.extension, {"failed": bad, "traces": result.traces}), end="")
        if args.out_dir:
            from .figure import hasse_figure

            d = Path(args.out_dir)
            d.mkdir(parents=True, exist_ok=True)
            hasse_figure(a, d / f"{n}.png")
    if args.out_dir:
        (Path(args.out_dir) / "corpus.tsv").write_text(render_tsv(rows), encoding="utf-8")
    print(f"{len(names) - failed}/{len(names)} items pass")
    return FAILED if failed else OK


def cmd_fuzz(args):
    if args.negate is not None and args.negate not in LAWS:
        raise UsageError(f"unknown law {args.negate!r}; known: {', '.join(LAWS)}")
    failures = 0
    rows = []
    for seed in range(args.seed, args.seed + args.count):
        inst = fuzz_instance(seed, max_nodes=args.max_nodes)
        violations = check_laws(inst.analysis, seed=seed, budget=args.max_nodes, negate=args.negate)
        L = inst.analysis.lattice
        rows.append({"seed": seed, "attempt": inst.attempt, "blocks": "+".join(inst.blocks),
                     "nodes": len(L), "length": L.length,
                     "delta": str(inst.analysis.delta).lower(),
                     "violations": ",".join(v.law for v in violations)})
        if violations:
            failures += 1
            print(f"FAIL seed {seed} (attempt {inst.attempt}, blocks {'+'.join(inst.blocks)})")
            for v in violations:
                print(f"  law {v.law} violated")
            print(_reproduction(inst.extension, {v.law: v.witness for v in violations}), end="")
    if args.table:
        Path(args.table).write_text(render_tsv(rows), encoding="utf-8")
    print(f"{args.count - failures}/{args.count} instances pass")
    return FAILED if failures else OK


def cmd_export(args):
    if args.name not in NAMES:
        raise UsageError(f"unknown corpus item {args.name!r}; known: {', '.join(NAMES)}")
    item = build(args.name)
    expected = {}
    for exp in item.expected:
        if exp.observe is STANDARD.get(exp.key):
            expected[exp.key] = exp.expected
    _emit(dump_spec(spec_from_extension(item.extension, expected)), args.out)
    return OK


def build_parser():
    p = argparse.ArgumentParser(prog="ringlat", description="Lattices of intermediate rings of finite ring extensions.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="full report for one spec file")
    a.add_argument("spec")
    a.add_argument("--format", choices=("text", "markdown"), default="text")
    a.add_argument("--out", help="write the report here instead of stdout")
    a.add_argument("--assert-expected", action="store_true",
                   help="exit 1 if any value in the file's expected block differs")
    a.add_argument("--figure", help="write a Hasse diagram image (png, svg, pdf)")
    a.add_argument("--tables", help="directory for nodes.tsv and covers.tsv")
    a.set_defaults(func=cmd_analyze)

    lat = sub.add_parser("lattice", help="DOT graph of the interval")
    lat.add_argument("spec")
    lat.add_argument("--dot", help="output file (default stdout)")
    lat.set_defaults(func=cmd_lattice)

    c = sub.add_parser("corpus", help="check the built-in examples")
    c.add_argument("--only", nargs="+", metavar="NAME")
    c.add_argument("--out-dir", help="write corpus.tsv and one Hasse figure per item")
    c.set_defaults(func=cmd_corpus)

    f = sub.add_parser("fuzz", help="random instances against the law suite")
    f.add_argument("--seed", type=int, default=0)
    f.add_argument("--count", type=int, default=200)
    f.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES)
    f.add_argument("--negate", metavar="LAW", help="test mode: invert one law, which must then fail")
    f.add_argument("--table", help="write a per-seed TSV summary")
    f.set_defaults(func=cmd_fuzz)

    e = sub.add_parser("export", help="write a corpus item as a spec file")
    e.add_argument("name")
    e.add_argument("--out")
    e.set_defaults(func=cmd_export)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except RingLatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT
