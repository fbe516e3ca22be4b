"""Command-line surface and the JSON complex file format.

The complex format is a single JSON document

    {"vertices": [{"label": str, "row": int?, "block": int?}, ...],
     "facets": [[int, ...], ...]}

with facets referencing vertices by index.  This module is the only
reader and writer of that format.

Exit codes: 0 success, 1 usage or input error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .bounds import bound_report
from .complexes import SimplicialComplex, Vertex, deleted_join
from .errors import TvlabError
from .homology import betti_numbers
from .matroids import block_matroid, chessboard, uniform_matroid
from .products import (
    basis_surplus_flags,
    deleted_product,
    homological_connectivity,
    product_betti,
)
from .shelling import (
    ShellingOrder,
    search_shelling,
    shell_block_deleted_join,
    verify_shelling_intersection,
    verify_shelling_pairwise,
)
from .verification import run_registry


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def complex_to_json_dict(complex_: SimplicialComplex) -> dict:
    verts = []
    for v in complex_.vertices:
        entry = {"label": v.label}
        if v.row is not None:
            entry["row"] = v.row
        if v.block is not None:
            entry["block"] = v.block
        verts.append(entry)
    return {"vertices": verts, "facets": [list(f) for f in complex_.facets]}


def complex_from_json_dict(data: dict) -> SimplicialComplex:
    if not isinstance(data, dict) or "vertices" not in data or "facets" not in data:
        raise ValueError("complex file needs 'vertices' and 'facets' keys")
    verts = []
    for i, entry in enumerate(data["vertices"]):
        verts.append(Vertex(i, entry.get("label", f"v{i}"),
                            entry.get("row"), entry.get("block")))
    n = len(verts)
    facets = []
    for f in data["facets"]:
        f = sorted(int(v) for v in f)
        if f and (f[0] < 0 or f[-1] >= n):
            raise ValueError(f"facet {f} references a vertex outside 0..{n - 1}")
        facets.append(tuple(f))
    return SimplicialComplex(tuple(verts), facets)


def load_complex(path: str) -> SimplicialComplex:
    with open(path) as fh:
        text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: malformed JSON at byte offset {exc.pos}: {exc.msg}")
    return complex_from_json_dict(data)


def save_json(path: str | None, payload: dict) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _add_common(parser, suppress: bool) -> None:
    d = argparse.SUPPRESS if suppress else None

    def default(v):
        return argparse.SUPPRESS if suppress else v

    parser.add_argument("--ring", default=default("f2"), choices=["f2"],
                        help="coefficient ring (reserved; only f2 is implemented)")
    parser.add_argument("--cache-dir", default=default(None),
                        help="cache directory (default: TVLAB_CACHE when set)")
    parser.add_argument("--budget", type=int, default=default(100_000),
                        help="step budget for searches and simplification")
    parser.add_argument("--format", default=default("json"), choices=["json", "md"])
    parser.add_argument("--seed", type=int, default=default(None),
                        help="shuffle seed for search tie-breaking")


def _build_parser() -> _Parser:
    ap = _Parser(prog="tvlab", description="matroid complexes, deleted joins and "
                 "products, GF(2) homology, shellings, and bound calculators")
    _add_common(ap, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _add_common(common, suppress=True)
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="construct a named complex", parents=[common])
    b.add_argument("kind", choices=["mr", "mr-prime", "uniform", "chessboard"])
    b.add_argument("--r", type=int)
    b.add_argument("--k", type=int)
    b.add_argument("--m", type=int)
    b.add_argument("--n", type=int)
    b.add_argument("--deleted-join", type=int, default=0, metavar="K",
                   help="emit the K-fold deleted join of the built complex")
    b.add_argument("-o", "--output", default=None)

    h = sub.add_parser("homology", help="reduced Betti numbers of a complex file",
                       parents=[common])
    h.add_argument("input")
    h.add_argument("--deleted-join", type=int, default=0, metavar="K")
    h.add_argument("-o", "--output", default=None)

    s = sub.add_parser("shell", help="verify, search, or construct shellings",
                       parents=[common])
    ssub = s.add_subparsers(dest="action", required=True)
    sv = ssub.add_parser("verify", parents=[common])
    sv.add_argument("input")
    sv.add_argument("order")
    ss = ssub.add_parser("search", parents=[common])
    ss.add_argument("input")
    ss.add_argument("-o", "--output", default=None)
    sm = ssub.add_parser("mr2", help="explicit shelling of the 2-fold deleted join",
                         parents=[common])
    sm.add_argument("--r", type=int, required=True)
    sm.add_argument("--width", type=int, default=None)
    sm.add_argument("-o", "--output", default=None)
    sm.add_argument("--complex-output", default=None)

    d = sub.add_parser("delprod", help="deleted product homology and connectivity",
                       parents=[common])
    d.add_argument("input")
    d.add_argument("--k", type=int, required=True)
    d.add_argument("--max-dim-cap", type=int, default=5_000_000,
                   help="refuse instances with more product cells than this")
    d.add_argument("--bases", type=int, default=None,
                   help="disjoint basis count used for hypothesis flags")
    d.add_argument("--rank", type=int, default=None)
    d.add_argument("-o", "--output", default=None)

    bo = sub.add_parser("bounds", help="bound calculators", parents=[common])
    bo.add_argument("--b", type=int, required=True)
    bo.add_argument("--r", type=int, required=True)
    bo.add_argument("--d", type=int, required=True)
    bo.add_argument("-o", "--output", default=None)

    vp = sub.add_parser("verify-paper", help="run the machine-checked claim registry",
                        parents=[common])
    vp.add_argument("--rmax", type=int, default=3, choices=[2, 3, 4])
    vp.add_argument("--only", action="append", default=None,
                    help="restrict to specific claim ids")
    vp.add_argument("-o", "--output", default=None)
    return ap


def _cmd_build(args) -> int:
    if args.kind in ("mr", "mr-prime"):
        if args.r is None:
            raise _UsageError("build mr needs --r")
        width = args.r + 1 if args.kind == "mr-prime" else None
        cpx = block_matroid(args.r, width).complex
    elif args.kind == "uniform":
        if args.m is None or args.n is None:
            raise _UsageError("build uniform needs --m and --n")
        cpx = uniform_matroid(args.m, args.n).complex
    else:
        if args.k is None or args.r is None:
            raise _UsageError("build chessboard needs --k and --r")
        cpx = chessboard(args.k, args.r)
    if args.deleted_join:
        cpx = deleted_join(cpx, args.deleted_join)
    save_json(args.output, complex_to_json_dict(cpx))
    return 0


def _cmd_homology(args) -> int:
    cpx = load_complex(args.input)
    if args.deleted_join:
        cpx = deleted_join(cpx, args.deleted_join)
    bv = betti_numbers(cpx)
    save_json(args.output, {"betti": list(bv.values), "dim": cpx.dim,
                            "n_facets": len(cpx.facets)})
    return 0


def _cmd_shell(args) -> int:
    if args.action == "verify":
        cpx = load_complex(args.input)
        with open(args.order) as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ValueError(f"{args.order}: malformed JSON at byte offset "
                                 f"{exc.pos}: {exc.msg}")
        so = ShellingOrder.from_json_dict(cpx, data)
        res = verify_shelling_pairwise(cpx, so.order)
        other = verify_shelling_intersection(cpx, so.order)
        status = "pass" if (res.ok and other) else "fail"
        print(json.dumps({"pairwise": res.ok, "intersection": other,
                          "status": status}))
        return 0 if status == "pass" else 2
    if args.action == "search":
        cpx = load_complex(args.input)
        res = search_shelling(cpx, budget=args.budget, seed=args.seed)
        if res.found:
            save_json(args.output, res.shelling.to_json_dict())
            return 0
        print(json.dumps({"status": res.status, "explored": res.explored}))
        return 2 if res.status == "not-shellable" else 0
    # mr2
    bjs = shell_block_deleted_join(args.r, width=args.width)
    if args.complex_output:
        save_json(args.complex_output, complex_to_json_dict(bjs.complex))
    save_json(args.output, bjs.shelling.to_json_dict())
    return 0


def _cmd_delprod(args) -> int:
    cpx = load_complex(args.input)
    product = deleted_product(cpx, args.k, max_cells=args.max_dim_cap)
    bv = product_betti(product)
    payload = {
        "k": args.k,
        "dim": product.dim,
        "cells": product.total_cells(),
        "betti": list(bv.values),
        "homological_connectivity": homological_connectivity(product, bv),
    }
    if args.bases is not None and args.rank is not None:
        payload["hypotheses"] = basis_surplus_flags(args.bases, args.rank, args.k)
    save_json(args.output, payload)
    return 0


def _cmd_bounds(args) -> int:
    rep = bound_report(args.b, args.r, args.d)
    if args.format == "md":
        d = rep.to_dict()
        print("| " + " | ".join(d) + " |")
        print("|" + "---|" * len(d))
        print("| " + " | ".join(str(v) for v in d.values()) + " |")
    else:
        save_json(args.output, rep.to_dict())
    return 0


def _cmd_verify_paper(args) -> int:
    cache = args.cache_dir or os.environ.get("TVLAB_CACHE")
    report = run_registry(rmax=args.rmax, budget=args.budget, cache_dir=cache,
                          only=args.only)
    if args.format == "md":
        print(report.to_markdown())
    else:
        save_json(args.output, report.to_json_dict())
    return 0 if report.ok else 2


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    try:
        if args.command == "build":
            return _cmd_build(args)
        if args.command == "homology":
            return _cmd_homology(args)
        if args.command == "shell":
            return _cmd_shell(args)
        if args.command == "delprod":
            return _cmd_delprod(args)
        if args.command == "bounds":
            return _cmd_bounds(args)
        if args.command == "verify-paper":
            return _cmd_verify_paper(args)
        raise _UsageError(f"unknown command {args.command}")
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError, TvlabError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
