"""Command-line front door with stable JSON output.

Subcommands: bound, construct, hilbert, intersect, verify, scenario.
Output is a single JSON document on stdout (canonical key order, so equal
configs produce byte-identical bytes); --pretty switches to indented form.
Errors go to stderr. Exit codes: 0 success / verification passed, 1
verification failed, 2 usage or input errors, 3 no Hilbert stabilization.

The default modulus may be set with the ACMCURVES_PRIME environment
variable; an explicit --prime flag wins.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from pathlib import Path

from . import formulas, jsonio
from .construct import build_uniform_pair, gorenstein_generators, skew_matrix_G, union_matrix
from .harness import intersect_count, run_scenario, verify_construction
from .hilbert import h_vector_from_profile, hilbert_function
from .ring import DEFAULT_PRIME, PolyRing

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_NOT_STABILIZED = 3


def _default_prime() -> int:
    env = os.environ.get("ACMCURVES_PRIME")
    return int(env) if env else DEFAULT_PRIME


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="acmcurves",
                                 description="exact determinantal-curve computations")
    ap.add_argument("--pretty", action="store_true", help="indent the JSON output")
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bound", help="closed-form intersection bound and h-vector")
    b.add_argument("--t", type=int, required=True)
    b.add_argument("--r", type=int, required=True)
    b.add_argument("--d", type=int, default=1)

    c = sub.add_parser("construct", help="emit a construction pair and its derived data")
    c.add_argument("--t", type=int, required=True)
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--d", type=int, default=1)
    c.add_argument("--prime", type=int, default=None)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--out-dir", type=Path, default=None,
                   help="also write mSmall/mBig/union/skew/generators as separate JSON files")

    h = sub.add_parser("hilbert", help="Hilbert-function profile of an ideal file")
    h.add_argument("--input", type=Path, required=True)
    h.add_argument("--cutoff", type=int, default=None)
    h.add_argument("--codim", type=int, default=None,
                   help="also extract the h-vector at this codimension")

    i = sub.add_parser("intersect", help="length of the intersection of two matrix files")
    i.add_argument("--a", type=Path, required=True)
    i.add_argument("--b", type=Path, required=True)
    i.add_argument("--cutoff", type=int, default=None)

    v = sub.add_parser("verify", help="full construction verification report")
    v.add_argument("--t", type=int, required=True)
    v.add_argument("--r", type=int, required=True)
    v.add_argument("--d", type=int, default=1)
    v.add_argument("--prime", type=int, default=None)
    v.add_argument("--seed", type=int, default=0)

    s = sub.add_parser("scenario", help="run a scripted example scenario")
    s.add_argument("--id", required=True,
                   help="ex-11, ex-26, ex-2d3 (with --d), or ex-mixed")
    s.add_argument("--d", type=int, default=2)
    s.add_argument("--prime", type=int, default=None)
    s.add_argument("--seed", type=int, default=None,
                   help="override the pinned scenario seed")
    return ap


def _emit(doc, pretty: bool) -> None:
    sys.stdout.write(jsonio.dumps(doc, pretty=pretty) + "\n")


def _cmd_bound(args) -> int:
    bound = formulas.bound_uniform(args.d, args.t, args.r)
    shape = None
    h_vec = None
    if args.r >= 1:
        shape = formulas.expected_betti(args.t, args.r, args.d)
        h_vec, _ = formulas.hilbert_from_resolution(shape)
    doc = {
        "t": args.t, "r": args.r, "d": args.d,
        "bound": bound,
        "hVector": list(h_vec) if h_vec is not None else None,
        "expectedBetti": [list(term) for term in shape.terms] if shape else None,
    }
    _emit(doc, args.pretty)
    return EXIT_OK


def _cmd_construct(args) -> int:
    prime = args.prime if args.prime is not None else _default_prime()
    pair = build_uniform_pair(args.t, args.r, args.d, random.Random(args.seed),
                              ring=PolyRing(prime, 4))
    gens = gorenstein_generators(pair)
    docs = {
        "t": args.t, "r": args.r, "d": args.d, "p": prime, "seed": args.seed,
        "mSmall": jsonio.matrix_to_doc(pair.m_small),
        "mBig": jsonio.matrix_to_doc(pair.m_big),
        "unionMatrix": jsonio.matrix_to_doc(union_matrix(pair)),
        "skewMatrix": jsonio.matrix_to_doc(skew_matrix_G(pair)),
        "generators": jsonio.ideal_to_doc(gens),
    }
    if args.out_dir is not None:
        args.out_dir.mkdir(parents=True, exist_ok=True)
        for name in ("mSmall", "mBig", "unionMatrix", "skewMatrix", "generators"):
            (args.out_dir / f"{name}.json").write_text(jsonio.dumps(docs[name]) + "\n")
    _emit(docs, args.pretty)
    return EXIT_OK


def _cmd_hilbert(args) -> int:
    ideal = jsonio.ideal_from_doc(json.loads(args.input.read_text()))
    degs = sorted((g.degree for g in ideal.generators), reverse=True)
    cutoff = args.cutoff if args.cutoff is not None else degs[0] + degs[min(1, len(degs) - 1)] + 4
    profile = hilbert_function(ideal, cutoff)
    doc = jsonio.profile_to_doc(profile)
    if args.codim is not None:
        doc["hVector"] = list(h_vector_from_profile(profile, args.codim))
        doc["hVectorSum"] = sum(doc["hVector"])
    _emit(doc, args.pretty)
    return EXIT_OK


def _cmd_intersect(args) -> int:
    a = jsonio.matrix_from_doc(json.loads(args.a.read_text()))
    b = jsonio.matrix_from_doc(json.loads(args.b.read_text()))
    count, profile = intersect_count(a, b, cutoff=args.cutoff)
    doc = {"degree": count, "profile": jsonio.profile_to_doc(profile)}
    _emit(doc, args.pretty)
    if count is None:
        print("intersection did not stabilize: shared component or cutoff too small",
              file=sys.stderr)
        return EXIT_NOT_STABILIZED
    return EXIT_OK


def _cmd_verify(args) -> int:
    prime = args.prime if args.prime is not None else _default_prime()
    report = verify_construction(args.t, args.r, args.d, seed=args.seed, prime=prime)
    _emit(jsonio.report_to_doc(report), args.pretty)
    return EXIT_OK if report.passed else EXIT_FAIL


def _cmd_scenario(args) -> int:
    prime = args.prime if args.prime is not None else _default_prime()
    report = run_scenario(args.id, d=args.d, seed=args.seed, prime=prime)
    _emit(jsonio.report_to_doc(report), args.pretty)
    return EXIT_OK if report.passed else EXIT_FAIL


_DISPATCH = {
    "bound": _cmd_bound,
    "construct": _cmd_construct,
    "hilbert": _cmd_hilbert,
    "intersect": _cmd_intersect,
    "verify": _cmd_verify,
    "scenario": _cmd_scenario,
}


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
