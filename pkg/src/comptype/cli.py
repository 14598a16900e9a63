"""Command line interface: ``comptype <command> ...``.

Exit status is 0 for any completed analysis (YES, NO and UNKNOWN alike),
2 for bad input or usage, 3 when ``--oracle`` finds a disagreement.
"""

from __future__ import annotations

import argparse
import sys

from .complex import ComplexError, Marker, odd_subcomplex, link_pair, Pair
from .crosscheck import link_disagreements
from .decider import computable_type, cone_pair_surjection
from .generators import GeneratorError, generate
from .homology import Coeff, Zk, relative_homology
from .pairfile import (PairFileError, build_report, cone_report, emit_report,
                       format_pair_file, parse_pair_file)

EXIT_OK, EXIT_INPUT, EXIT_ORACLE = 0, 2, 3


class InputError(Exception):
    pass


def _read_pair(path: str) -> Pair:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_pair_file(text)
    except (PairFileError, ComplexError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _join(s) -> str:
    return " ".join(s) if s else "-"


def _explain(report) -> str:
    lines = []
    for r in report:
        v = r.verdict
        head = f"vertex {r.vertex}: link has {len(r.link.L.facets)} facet(s), N is {r.link.describe_N()}"
        lines.append(f"{head}; fragment {v.fragment}; route {v.route}; cone pair {v.value.value}")
        for w in v.witnesses:
            lines.append(f"  facet {_join(w.facet)}: {w.reason}")
        for c in v.checks:
            if c.passed and c.witness is not None and c.witness.route == "lattice":
                lines.append(f"  facet {_join(c.facet)} passes only with torsion coefficients "
                             f"(Z/{c.witness.modulus})")
    return "\n".join(lines)


def cmd_check(args, out) -> int:
    pair = _read_pair(args.file)
    if pair.X.is_empty():
        raise InputError("empty complex")
    verdict, report = computable_type(pair, workers=args.workers)
    status = EXIT_OK
    if args.oracle:
        problems = [m for r in report for m in link_disagreements(r)]
        if problems:
            for m in problems:
                print(f"ORACLE DISAGREEMENT: {m}", file=sys.stderr)
            status = EXIT_ORACLE
    doc = build_report(pair, verdict, report)
    if args.json:
        out.write(emit_report(doc))
        return status
    out.write(f"VERDICT: {doc['verdict']}\n")
    out.write(f"vertices {doc['stats']['vertices']}, facets {doc['stats']['facets']}, "
              f"dim {doc['stats']['dim']}\n")
    for link in doc["links"]:
        failing = "; ".join(" ".join(f) for f in link["failing_facets"]) or "-"
        extra = f"  Z/{link['witness_modulus']}" if "witness_modulus" in link else ""
        out.write(f"  {link['vertex']:<8} {link['fragment']:<11} {link['verdict']:<8} "
                  f"failing: {failing}{extra}\n")
    if args.explain:
        out.write(_explain(report) + "\n")
    if args.oracle and status == EXIT_OK:
        out.write("ORACLE: all cross-checks agree\n")
    return status


def cmd_cone_check(args, out) -> int:
    pair = _read_pair(args.file)
    N = pair.A if not pair.A.is_empty() else Marker.EMPTY
    verdict = cone_pair_surjection(pair.X, N)
    if args.json:
        out.write(emit_report(cone_report(pair.X, N, verdict)))
        return EXIT_OK
    out.write(f"SURJECTION: {verdict.value.value}\n")
    out.write(f"fragment {verdict.fragment}, route {verdict.route}\n")
    for w in verdict.witnesses:
        out.write(f"  {_join(w.facet)}: {w.reason}\n")
    return EXIT_OK


def cmd_homology(args, out) -> int:
    pair = _read_pair(args.file)
    if args.dim < 0:
        raise InputError("--dim must be nonnegative")
    if args.mod is not None and args.mod < 2:
        raise InputError("--mod must be at least 2")
    coeff = Zk(args.mod) if args.mod else Coeff.Z
    g = relative_homology(pair, args.dim, coeff)
    label = f"Z/{args.mod}" if args.mod else "Z"
    rel = ", A" if not pair.A.is_empty() else ""
    out.write(f"H_{args.dim}(X{rel}; {label}) = {g}\n")
    return EXIT_OK


def cmd_odd(args, out) -> int:
    pair = _read_pair(args.file)
    odd = odd_subcomplex(pair.X)
    if args.emit_pair:
        out.write(format_pair_file(Pair(pair.X, odd), header=["pair (K, odd K)"]))
        return EXIT_OK
    if odd.is_empty():
        out.write("# odd subcomplex is empty\n")
    for f in odd.facets:
        out.write(" ".join(f) + "\n")
    return EXIT_OK


def cmd_links(args, out) -> int:
    pair = _read_pair(args.file)
    verts = pair.X.vertices
    if args.vertex is not None:
        if (args.vertex,) not in pair.X:
            raise InputError(f"unknown vertex {args.vertex}")
        verts = (args.vertex,)
    for v in verts:
        lp = link_pair(pair, v)
        L = "; ".join(" ".join(f) for f in lp.L.facets) or "(empty)"
        if isinstance(lp.N, Marker):
            N = lp.N.value
        else:
            N = "; ".join(" ".join(f) for f in lp.N.facets)
        out.write(f"{v}: L = {L} | N = {N}\n")
    return EXIT_OK


def cmd_generate(args, out) -> int:
    try:
        pair = generate(args.name, *args.params)
    except GeneratorError as exc:
        raise InputError(str(exc)) from None
    out.write(format_pair_file(pair, header=["generated: " + " ".join([args.name] + args.params)]))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="comptype",
                                description="Decide computable type of finite simplicial pairs.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="decide computable type of a pair file")
    c.add_argument("file")
    c.add_argument("--json", action="store_true", help="print the JSON report only")
    c.add_argument("--explain", action="store_true", help="append a prose explanation")
    c.add_argument("--oracle", action="store_true", help="run brute-force cross-checks")
    c.add_argument("--workers", type=int, default=None, help="analyse links on N threads")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("cone-check", help="treat the file's (X, A) as (L, N) and test C(L, N)")
    c.add_argument("file")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_cone_check)

    c = sub.add_parser("homology", help="relative homology group")
    c.add_argument("file")
    c.add_argument("--dim", type=int, required=True)
    c.add_argument("--mod", type=int, default=None)
    c.set_defaults(func=cmd_homology)

    c = sub.add_parser("odd", help="odd subcomplex")
    c.add_argument("file")
    c.add_argument("--emit-pair", action="store_true", help="write the pair (K, odd K)")
    c.set_defaults(func=cmd_odd)

    c = sub.add_parser("links", help="vertex link pairs")
    c.add_argument("file")
    c.add_argument("--vertex", default=None)
    c.set_defaults(func=cmd_links)

    c = sub.add_parser("generate", help="write a named pair as a pair file")
    c.add_argument("name")
    c.add_argument("params", nargs="*")
    c.set_defaults(func=cmd_generate)
    return p


def run_command(argv, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
