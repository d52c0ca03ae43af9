"""Command-line front end.

Subcommands: verify, search, enumerate, construct, bounds, label.
Exit codes follow one convention: 0 for a positive answer (irregular /
found / valid), 1 for a negative one, 2 for usage, I/O or parse errors.

Every run emits a single structured record (JSON, fixed field order:
command, input_digest, rng_seed, outcome, elapsed, version, payload)
appended to the ``--log`` file when given. Replaying a recorded command
with its recorded seed reproduces the payload byte-for-byte; wall time
lives outside the payload. Randomness flows from ``--seed``; omitting
it selects an entropy seed which is printed in the report.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import secrets
import sys
import time
from pathlib import Path

from . import __version__, arcio, constructions, enumeration, labeling, verify
from .search import DEFAULT_BUDGET, FOUND, SearchBudget, WitnessLibrary
from .search import search as run_search
from .graphs import Digraph, LabeledGraph, UndirectedGraph

LIBRARY_ENV = "LINKIRR_LIBRARY"


def _digest(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _emit_record(args, payload: dict, outcome: str, rng_seed: int | None,
                 input_digest: str | None, t0: float) -> None:
    record = {
        "command": getattr(args, "_argv", None),
        "input_digest": input_digest,
        "rng_seed": rng_seed,
        "outcome": outcome,
        "elapsed": round(time.perf_counter() - t0, 6),
        "version": __version__,
        "payload": payload,
    }
    line = json.dumps(record, separators=(",", ":"))
    log = getattr(args, "log", None)
    if log:
        with open(log, "a") as fh:
            fh.write(line + "\n")


def _load(path, want=None):
    obj = arcio.read_path(path)
    if want is not None and not isinstance(obj, want):
        names = want.__name__ if isinstance(want, type) else "/".join(w.__name__ for w in want)
        raise arcio.FormatError(f"expected a {names} file", 1)
    return obj


def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    try:
        d = _load(args.path, Digraph)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    cert = verify.is_link_irregular(d)
    payload = cert.to_record()
    if cert.is_irregular:
        print(f"{args.path}: link-irregular (n={d.n}, arcs={d.size})")
    else:
        if cert.witness is not None:
            u, v, mapping = cert.witness
            print(f"{args.path}: not link-irregular; vertices {u} and {v} "
                  f"have isomorphic links (mapping {list(mapping)})")
        else:
            print(f"{args.path}: not link-irregular (order {d.n} < 2)")
    _emit_record(args, payload, cert.verdict, None, _digest(args.path), t0)
    return 0 if cert.is_irregular else 1


def cmd_search(args) -> int:
    t0 = time.perf_counter()
    if args.n < 1:
        print("error: --n must be >= 1", file=sys.stderr)
        return 2
    seed = args.seed if args.seed is not None else secrets.randbits(63)
    try:
        budget = SearchBudget(
            random_attempts=args.random_attempts,
            hc_steps=args.hc_steps,
            hc_restarts=args.hc_restarts,
            seeded_attempts=args.seeded_attempts,
        )
        library_dir = args.library or os.environ.get(LIBRARY_ENV)
        library = (WitnessLibrary.from_dir(library_dir) if library_dir
                   else WitnessLibrary.builtin())
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = run_search(args.n, budget, seed, library, jobs=args.jobs)
    print(report.log_json())
    if report.outcome == FOUND:
        witness = report.witness()
        if args.out:
            arcio.write_path(args.out, witness)
            print(f"witness written to {args.out}")
        if library_dir:
            path = library.save_witness(library_dir, witness)
            print(f"witness stored in library: {path}")
    _emit_record(args, report.payload(), report.outcome, seed, None, t0)
    return 0 if report.outcome == FOUND else 1


def cmd_enumerate(args) -> int:
    t0 = time.perf_counter()
    try:
        spec = enumeration.EnumSpec(args.n, args.universe,
                                    None if args.predicate == "none" else args.predicate)
        size = enumeration.universe_size(spec)
        if spec.predicate is None:
            hits = None
            print(f"universe {args.universe} n={args.n}: {size} objects")
        else:
            hits = enumeration.count_link_irregular(spec, jobs=args.jobs)
            print(f"universe {args.universe} n={args.n}: {size} objects, "
                  f"{hits} link-irregular")
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    payload = {"n": args.n, "universe": args.universe,
               "predicate": spec.predicate, "size": size, "hits": hits}
    _emit_record(args, payload, "counted", None, None, t0)
    return 0


def cmd_construct(args) -> int:
    t0 = time.perf_counter()
    if args.list:
        for name in sorted(constructions.corpus()):
            print(name)
        return 0
    if not args.name:
        print("error: construction name required (or --list)", file=sys.stderr)
        return 2
    try:
        nc = constructions.build_named(args.name)
    except (KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out = Path(args.out) if args.out else Path(nc.filename)
    arcio.write_path(out, nc.obj, comments=nc.comments)
    print(f"wrote {out}")
    _emit_record(args, {"name": args.name, "file": str(out)}, "written", None, None, t0)
    return 0


def cmd_bounds(args) -> int:
    t0 = time.perf_counter()
    if args.n < 1:
        print("error: --n must be >= 1", file=sys.stderr)
        return 2
    report = verify.bound_report(args.n)
    print(f"n={report.n}: h={report.h} degree_bound={report.degree_bound!r} "
          f"outdegree_bound={report.outdegree_bound!r}")
    payload = {"n": report.n, "h": report.h,
               "degree_bound": report.degree_bound,
               "outdegree_bound": report.outdegree_bound}
    _emit_record(args, payload, "computed", None, None, t0)
    return 0


def cmd_label(args) -> int:
    t0 = time.perf_counter()
    try:
        if args.mode == "check":
            lg = _load(args.path, LabeledGraph)
            ok, witness = labeling.verify_labeling(lg)
            outcome = "valid" if ok else "invalid"
            if ok:
                print(f"{args.path}: link-irregular labeling")
            else:
                print(f"{args.path}: not link-irregular; vertices "
                      f"{witness[0]} and {witness[1]} have isomorphic labeled links")
        else:
            g = _load(args.path, UndirectedGraph)
            ok, witness_d = labeling.is_link_irregular_orientable(g)
            outcome = "orientable" if ok else "not-orientable"
            if ok:
                print(f"{args.path}: link-irregular orientable; "
                      f"witness arcs {list(witness_d.arcs)}")
            else:
                print(f"{args.path}: no link-irregular orientation")
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit_record(args, {"mode": args.mode, "ok": ok}, outcome, None,
                 _digest(args.path), t0)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linkirr",
        description="Decide, search for, construct and certify link-irregular "
                    "digraphs and tournaments.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("verify", help="decide link-irregularity of an arc-list file")
    p.add_argument("path")
    p.add_argument("--log", help="append the run record to this JSONL file")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("search", help="search for a link-irregular tournament")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=None,
                   help="RNG seed (default: fresh entropy, printed in the report)")
    p.add_argument("--random-attempts", type=int, default=DEFAULT_BUDGET.random_attempts)
    p.add_argument("--hc-steps", type=int, default=DEFAULT_BUDGET.hc_steps)
    p.add_argument("--hc-restarts", type=int, default=DEFAULT_BUDGET.hc_restarts)
    p.add_argument("--seeded-attempts", type=int, default=DEFAULT_BUDGET.seeded_attempts)
    p.add_argument("--library", help=f"witness library directory (default ${LIBRARY_ENV})")
    p.add_argument("--out", help="write the found witness to this .dg file")
    p.add_argument("--jobs", type=int, default=1, help="concurrent task workers")
    p.add_argument("--log", help="append the run record to this JSONL file")
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("enumerate", help="exhaustively count small universes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--universe", choices=sorted(enumeration.UNIVERSES), required=True)
    p.add_argument("--predicate", choices=["link-irregular", "none"], default="none")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--log", help="append the run record to this JSONL file")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("construct", help="write a named construction to a file")
    p.add_argument("name", nargs="?")
    p.add_argument("--out")
    p.add_argument("--list", action="store_true", help="list corpus names")
    p.add_argument("--log", help="append the run record to this JSONL file")
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("bounds", help="degree bounds a link-irregular digraph must meet")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--log", help="append the run record to this JSONL file")
    p.set_defaults(fn=cmd_bounds)

    p = sub.add_parser("label", help="labeling checks on undirected graphs")
    p.add_argument("mode", choices=["check", "orientable"])
    p.add_argument("path")
    p.add_argument("--log", help="append the run record to this JSONL file")
    p.set_defaults(fn=cmd_label)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; version/help exit 0
        return int(exc.code or 0)
    args._argv = list(argv) if argv is not None else sys.argv[1:]
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
