"""``layerline`` command line.

Exit codes: 0 success, 1 verification failure, 2 invalid parameters,
3 search budget exceeded.  The search budget can be overridden with the
``LAYERLINE_SEARCH_BUDGET`` environment variable.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from . import certificates as C
from .automorphisms import default_budget
from .errors import LayerlineError, SearchBudgetExceeded
from .graph_io import to_dot, to_graph6, to_json
from .layers import LayerParams, build_b, build_line_b

EXIT_OK, EXIT_VERIFY, EXIT_PARAMS, EXIT_BUDGET = 0, 1, 2, 3


def _nk(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="layerline", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="emit B(n,k) or its line graph")
    _nk(p)
    p.add_argument("--line", action="store_true")
    p.add_argument("--format", choices=("graph6", "dot", "json"), default="graph6")

    p = sub.add_parser("props", help="basic structural properties of B(n,k)")
    _nk(p)

    p = sub.add_parser("aut", help="automorphism group order and generators")
    _nk(p)
    p.add_argument("--line", action="store_true")

    p = sub.add_parser("cayley-check", help="Cayley status of L(B(n,k))")
    _nk(p)

    p = sub.add_parser("cayley-build", help="semidirect-product Cayley graph over GF(q)")
    p.add_argument("--q", type=int, required=True)

    p = sub.add_parser("spectrum", help="exact spectrum check for L(B(n,1))")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("hamilton", help="Hamiltonian cycle of L(B(n,k)) from an Euler circuit")
    _nk(p)

    p = sub.add_parser("binomial-mod4", aliases=["lemma321"], help="C(2k+1, k) modulo 4")
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("fixed-vertex", help="line-graph vertex fixed by an involution")
    _nk(p)
    p.add_argument("--theta", help='involution in 1-based cycle notation, e.g. "(1 2)(3 4)"')
    p.add_argument("--samples", type=int, default=0, help="also test this many random involutions")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("verify", help="re-verify a stored certificate or report")
    p.add_argument("--certificate", required=True)
    return ap


def _emit(doc: dict) -> None:
    sys.stdout.write(C.dumps(doc))


def _run(args: argparse.Namespace) -> int:
    budget = default_budget()
    cmd = args.command
    if cmd == "build":
        LayerParams(args.n, args.k)
        g = build_line_b(args.n, args.k)[0] if args.line else build_b(args.n, args.k)
        if args.format == "graph6":
            sys.stdout.write(to_graph6(g) + "\n")
        elif args.format == "dot":
            sys.stdout.write(to_dot(g))
        else:
            sys.stdout.write(to_json(g) + "\n")
        return EXIT_OK
    if cmd == "props":
        _emit(C.props_report(args.n, args.k))
        return EXIT_OK
    if cmd == "aut":
        doc = C.aut_report(args.n, args.k, args.line, budget=budget)
        _emit(doc)
        if not doc["matches_prediction"]:
            print(f"error: order {doc['order']} != predicted {doc['predicted_order']}", file=sys.stderr)
            return EXIT_VERIFY
        return EXIT_OK
    if cmd == "cayley-check":
        doc = C.cayley_check_report(args.n, args.k, budget=budget)
        _emit(doc)
        if not doc["consistent_with_prediction"]:
            return EXIT_VERIFY
        return EXIT_BUDGET if doc["verdict"] == "undecided" else EXIT_OK
    if cmd == "cayley-build":
        doc = C.cayley_build_report(args.q)
        _emit(doc)
        return EXIT_OK if doc["verified"] else EXIT_VERIFY
    if cmd == "spectrum":
        doc = C.spectrum_report(args.n)
        _emit(doc)
        return EXIT_OK if doc["exact"] else EXIT_VERIFY
    if cmd == "hamilton":
        doc = C.hamilton_report(args.n, args.k)
        _emit(doc)
        return EXIT_VERIFY if doc["status"] == "invalid" else EXIT_OK
    if cmd in ("binomial-mod4", "lemma321"):
        _emit(C.binomial_report(args.k))
        return EXIT_OK
    if cmd == "fixed-vertex":
        if args.theta is None and args.samples <= 0:
            raise ValueError("give --theta and/or --samples")
        doc = C.fixed_vertex_report(args.n, args.k, args.theta, args.samples, args.seed)
        _emit(doc)
        return EXIT_OK if doc["all_fixed"] else EXIT_VERIFY
    if cmd == "verify":
        with open(args.certificate, encoding="utf-8") as fh:
            doc = json.load(fh)
        try:
            lines = C.verify(doc)
        except C.VerificationError as exc:
            print(f"FAILED: {exc}")
            return EXIT_VERIFY
        print("\n".join(f"OK: {line}" for line in lines))
        return EXIT_OK
    raise AssertionError(cmd)


def main(argv: Sequence[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return _run(args)
    except SearchBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, LayerlineError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS


if __name__ == "__main__":
    sys.exit(main())
