"""Command-line interface.

Exit codes: 0 success, 1 negative mathematical answer (UNSAT where SAT was
expected, a rejected certificate, a failed property suite), 2 usage or I/O
error.  Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import certify, construct, formats, props
from .errors import SLabelError
from .labeled import SLabeledGraph, from_graph
from .perm import parse_cycles
from .solver import SAT, UNSAT, enumerate_colourings, solve

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _write(data: bytes | str, out: str | None) -> None:
    if isinstance(data, str):
        data = data.encode()
    if out is None or out == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        Path(out).write_bytes(data)


def _read(path: str):
    try:
        raw = sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return formats.decode(raw)


def _labeled(path: str):
    doc = _read(path)
    if isinstance(doc, formats.Instance):
        return doc.labeled, doc.provenance
    if isinstance(doc, SLabeledGraph):
        return doc, {}
    raise UsageError(f"{path} does not hold an S-labeled graph")


def _instance(case: str) -> formats.Instance:
    if case == "base":
        g = construct.base_triangulation()
        return formats.Instance(from_graph(g.edges, 4, g.vertices), {"case": "base"})
    c = construct.construction(case)
    return formats.Instance(c.labeled, c.provenance())


def cmd_construct(args) -> int:
    _write(formats.encode(_instance(args.case)), args.out)
    return EXIT_OK


def cmd_bad_witness(args) -> int:
    p = parse_cycles(args.perm, 4)
    result = construct.bad_witness(p)
    if isinstance(result, construct.Citation):
        print(f"delegated to citation: {result.message()}")
        return EXIT_OK
    c, pi = construct.witness_construction(p)
    prov = dict(c.provenance(), relabel=list(pi.images), perm=list(p.images))
    _write(formats.encode(formats.Instance(result, prov)), args.out)
    return EXIT_OK


def cmd_solve(args) -> int:
    L, _ = _labeled(args.path)
    if args.count or args.enumerate is not None:
        limit = args.enumerate if args.enumerate is not None else 10 ** 7
        res = enumerate_colourings(L, limit)
        if args.count and not res.truncated:
            print(len(res))
        elif args.count:
            print(f">{limit}")
        else:
            for f in res:
                print(" ".join(f"{v}:{f[v]}" for v in L.vertices))
            if res.truncated:
                print(f"truncated at {limit} colourings", file=sys.stderr)
        status = SAT if len(res) else UNSAT
    else:
        res = solve(L)
        status = res.status
        print(status)
        if res.witness is not None and args.witness:
            print(" ".join(f"{v}:{res.witness[v]}" for v in L.vertices))
        if args.stats:
            print(json.dumps(res.stats.to_dict(), sort_keys=True), file=sys.stderr)
    if args.expect is not None:
        return EXIT_OK if status == args.expect.upper() else EXIT_NEGATIVE
    return EXIT_OK if status == SAT else EXIT_NEGATIVE


def cmd_certify(args) -> int:
    L, prov = _labeled(args.path)
    try:
        cert = certify.make_certificate(L, prov)
    except SLabelError as exc:
        print(f"cannot certify: {exc}", file=sys.stderr)
        return EXIT_ERROR
    _write(formats.encode(formats.Certificate(cert)), args.out)
    return EXIT_OK


def cmd_check_cert(args) -> int:
    cert = _read(args.cert)
    if not isinstance(cert, formats.Certificate):
        raise UsageError(f"{args.cert} is not a certificate")
    L, _ = _labeled(args.path)
    try:
        certify.check_certificate(cert.body, L)
    except (SLabelError, KeyError, TypeError, ValueError) as exc:
        print(f"REJECTED: {exc}")
        return EXIT_NEGATIVE
    print("VERIFIED: no proper colouring exists")
    return EXIT_OK


def cmd_adapt(args) -> int:
    try:
        raw = Path(args.path).read_bytes() if args.path != "-" else sys.stdin.buffer.read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.path}: {exc.strerror}") from None
    doc = formats.load_json(raw)
    if args.mode is not None:
        doc = dict(doc, mode=args.mode)
    L = formats.adapt(args.source, doc, args.k)
    _write(formats.encode(L), args.out)
    return EXIT_OK


def cmd_export(args) -> int:
    L, _ = _labeled(args.dot)
    _write(formats.to_dot(L), args.out)
    return EXIT_OK


def cmd_props(args) -> int:
    names = sorted(props.SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for name in names:
        rep = props.run_suite(name, args.trials, args.seed)
        print(rep.line())
        for msg in rep.failures[:10]:
            print(f"  {msg}", file=sys.stderr)
        ok &= rep.ok
    return EXIT_OK if ok else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="slabelcol", description="Colouring of S-labeled graphs.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("construct", help="build a non-4-colourable gadget instance")
    s.add_argument("--case", required=True, choices=construct.CASES + ("base",),
                   help="c123 / c1234 gadget graphs, or base (the all-id 24-face triangulation)")
    s.add_argument("--out")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("bad-witness", help="instance with labels in {id, PERM}, or a citation")
    s.add_argument("--perm", required=True, help='cycle notation on [4], e.g. "(132)"')
    s.add_argument("--out")
    s.set_defaults(func=cmd_bad_witness)

    s = sub.add_parser("solve", help="decide, enumerate or count proper colourings")
    s.add_argument("path")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--enumerate", type=int, metavar="N")
    g.add_argument("--count", action="store_true")
    s.add_argument("--witness", action="store_true", help="print the witness colouring")
    s.add_argument("--stats", action="store_true", help="search statistics as JSON on stderr")
    s.add_argument("--expect", choices=("sat", "unsat"))
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("certify", help="write a refutation certificate for a constructed instance")
    s.add_argument("path")
    s.add_argument("--out")
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("check-cert", help="verify a certificate against an instance")
    s.add_argument("cert")
    s.add_argument("path")
    s.set_defaults(func=cmd_check_cert)

    s = sub.add_parser("adapt", help="convert a signed / Z_k / gain edge list")
    s.add_argument("--from", dest="source", required=True, choices=("signed", "zk", "gain"))
    s.add_argument("--k", type=int)
    s.add_argument("--mode", choices=("signed-Nk", "signed-Zk"))
    s.add_argument("path")
    s.add_argument("--out")
    s.set_defaults(func=cmd_adapt)

    s = sub.add_parser("export", help="DOT rendering of an instance")
    s.add_argument("--dot", required=True, metavar="PATH")
    s.add_argument("--out")
    s.set_defaults(func=cmd_export)

    s = sub.add_parser("props", help="run a randomised invariant suite")
    s.add_argument("--suite", required=True, choices=sorted(props.SUITES) + ["all"])
    s.add_argument("--trials", type=int, default=200)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_props)
    return p


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
        return args.func(args)
    except UsageError as exc:
        print(f"slabelcol: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (SLabelError, OSError) as exc:
        print(f"slabelcol: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
