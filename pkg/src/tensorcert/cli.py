"""Command-line front end.

Every command prints one JSON document on standard output. Exit status 0
means the command ran, whatever the verdict; 2 means the input was
rejected.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import __version__
from .documents import DecompositionFile, DocumentError
from .hilbert import PointSet, cayley_bacharach, h_vector, hilbert_function
from .kruskal import kruskal_rank
from .linalg import as_matrix
from .reshape import (
    Tripartition,
    check_factors,
    certify,
    effective_range,
    expected_typical_rank,
    factor_dims,
    heuristic_partition,
    block_factor,
    reshaped_typical_rank,
    sweep_certify,
    tripartitions,
    unbalanced,
)
from .s4c4 import certify_s4c4
from .symmetric import SymmetricDecomposition, catalecticant_test, symmetric_certify

TOOL = "tensorcert"


class InputError(Exception):
    pass


def _fraction_json(q: Fraction):
    return q.numerator if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _envelope(command: str, mode=None, **payload) -> dict:
    out = {"tool": TOOL, "version": __version__, "command": command}
    if mode is not None:
        out["mode"] = mode.to_dict()
    out.update(payload)
    return out


def _load(path: str, kinds: tuple[str, ...]) -> DecompositionFile:
    doc = DecompositionFile.load(path)
    if doc.kind not in kinds:
        raise InputError(f"{path}: expected a document of kind {' or '.join(kinds)}, got {doc.kind!r}")
    return doc


def _indices(text: str) -> list[int]:
    if re.sub(r"[\d,\s{}]", "", text) or not re.search(r"\d", text):
        raise InputError(f"bad index list {text!r}")
    return [int(x) for x in re.findall(r"\d+", text)]


def _symmetric(doc: DecompositionFile, mode) -> SymmetricDecomposition:
    return SymmetricDecomposition(doc.weights, doc.points, doc.degree, mode)


def cmd_certify(args) -> dict:
    doc = _load(args.file, ("general",))
    mode = doc.scalar_mode(args.mode, args.epsilon)
    factors = check_factors(doc.factors, mode)
    dims = factor_dims(factors)
    if len(dims) < 3:
        raise InputError("certification needs at least three factor matrices")
    if args.sweep:
        best, runs = sweep_certify(factors, mode)
        return _envelope(
            "certify", mode,
            dims=list(dims),
            verdict=best.verdict.value,
            per_partition=[
                {"partition": p.to_dict(), "effective_range": effective_range(dims, p),
                 "certificate": c.to_dict()}
                for p, c in runs
            ],
        )
    if args.partition:
        try:
            p = Tripartition.parse(args.partition, dims)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    else:
        p = heuristic_partition(dims)
    cert = certify(factors, p, mode)
    return _envelope(
        "certify", mode,
        dims=list(dims),
        partition=p.to_dict(),
        effective_range=effective_range(dims, p),
        verdict=cert.verdict.value,
        certificate=cert.to_dict(),
    )


def cmd_kruskal(args) -> dict:
    doc = _load(args.file, ("general",))
    mode = doc.scalar_mode(args.mode, args.epsilon)
    factors = check_factors(doc.factors, mode)
    block = _indices(args.block) if args.block else [1]
    if any(i < 1 or i > len(factors) for i in block) or len(set(block)) != len(block):
        raise InputError(f"block {block} is not a set of indices in 1..{len(factors)}")
    report = kruskal_rank(block_factor(factors, block), mode)
    return _envelope("kruskal", mode, block=sorted(block), **report.to_dict())


def cmd_symmetric(args) -> dict:
    doc = _load(args.file, ("symmetric",))
    mode = doc.scalar_mode(args.mode, args.epsilon)
    dec = _symmetric(doc, mode)
    if dec.degree < 3:
        raise InputError("the symmetric test needs degree at least 3")
    split = None
    if args.split:
        split = tuple(_indices(args.split))
        if len(split) != 3 or sum(split) != dec.degree or min(split) < 1:
            raise InputError(f"split {split} is not a partition of the degree {dec.degree} into three parts")
        split = tuple(sorted(split, reverse=True))
    try:
        cert = symmetric_certify(dec, split)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    out = _envelope("symmetric", mode, verdict=cert.verdict.value, certificate=cert.to_dict())
    if args.catalecticant:
        if dec.degree % 2:
            raise InputError("the catalecticant test needs an even degree")
        out["catalecticant"] = catalecticant_test(dec).to_dict()
    return out


def cmd_s4c4(args) -> dict:
    doc = _load(args.file, ("symmetric",))
    mode = doc.scalar_mode(args.mode, args.epsilon)
    dec = _symmetric(doc, mode)
    try:
        report = certify_s4c4(dec)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return _envelope("s4c4", mode, verdict=report.verdict.value, report=report.to_dict())


def cmd_hilbert(args) -> dict:
    doc = _load(args.file, ("points", "symmetric"))
    mode = doc.scalar_mode(args.mode, args.epsilon)
    try:
        Z = PointSet(as_matrix(doc.points, mode), mode)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    out = _envelope("hilbert", mode, points=len(Z))
    if not mode.is_exact:
        out["warning"] = f"float mode: ranks use the threshold {mode.epsilon}"
    if args.d is not None:
        out["degree"] = args.d
        out["hilbert_function"] = hilbert_function(Z, args.d)
    if args.hvector:
        out["h_vector"] = h_vector(Z)
    if args.cb is not None:
        out["cb_degree"] = args.cb
        out["cayley_bacharach"] = cayley_bacharach(Z, args.cb)
    return out


def cmd_info(args) -> dict:
    try:
        dims = [int(x) for x in args.dims.replace("x", ",").split(",") if x.strip()]
    except ValueError:
        raise InputError(f"bad dimensions {args.dims!r}") from None
    if len(dims) < 3 or min(dims) < 1:
        raise InputError("need at least three positive mode sizes")
    best = heuristic_partition(dims)
    rows = []
    for p in tripartitions(dims):
        rows.append({
            "partition": str(p),
            "products": [p.pi_h, p.pi_k, p.pi_l],
            "effective_range": effective_range(dims, p),
            "reshaped_typical_rank": _fraction_json(reshaped_typical_rank(dims, p.blocks)),
            "heuristic": p == best,
        })
    return _envelope(
        "info",
        dims=dims,
        expected_typical_rank=_fraction_json(expected_typical_rank(dims)),
        unbalanced=unbalanced(dims),
        heuristic=str(best),
        heuristic_range=effective_range(dims, best),
        partitions=rows,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=TOOL,
        description="Certify uniqueness of given tensor rank and Waring decompositions.",
    )
    parser.add_argument("--version", action="version", version=f"{TOOL} {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_mode(p):
        p.add_argument("file", help="decomposition document (JSON)")
        p.add_argument("--mode", choices=("exact", "float"),
                       help="scalar field; defaults to the document's field")
        p.add_argument("--epsilon", type=float,
                       help="singular-value threshold in float mode")
        return p

    p = with_mode(sub.add_parser("certify", help="reshaped Kruskal test of a general decomposition"))
    group = p.add_mutually_exclusive_group()
    group.add_argument("--partition", help='tripartition such as "{2,3}|{1,4}|{5}"')
    group.add_argument("--heuristic", action="store_true", help="use the heuristic partition (default)")
    group.add_argument("--sweep", action="store_true", help="try every tripartition")
    p.set_defaults(func=cmd_certify)

    p = with_mode(sub.add_parser("kruskal", help="Kruskal rank of a Khatri-Rao block"))
    p.add_argument("--block", help='factor indices such as "2,3" (default: 1)')
    p.set_defaults(func=cmd_kruskal)

    p = with_mode(sub.add_parser("symmetric", help="symmetric reshaped Kruskal test"))
    group = p.add_mutually_exclusive_group()
    group.add_argument("--split", help='degree split such as "2,2,2"')
    group.add_argument("--heuristic", action="store_true", help="use the default split")
    p.add_argument("--catalecticant", action="store_true",
                   help="also report the catalecticant rank conditions (even degree)")
    p.set_defaults(func=cmd_symmetric)

    p = with_mode(sub.add_parser("s4c4", help="decision procedure for 4x4x4x4 symmetric tensors"))
    p.set_defaults(func=cmd_s4c4)

    p = with_mode(sub.add_parser("hilbert", help="Hilbert function of a point set"))
    p.add_argument("--d", type=int, help="evaluate H_Z at this degree")
    p.add_argument("--hvector", action="store_true", help="print the h-vector")
    p.add_argument("--cb", type=int, metavar="D", help="test the Cayley-Bacharach property CB(D)")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("info", help="typical rank and partition table for a format")
    p.add_argument("dims", help='mode sizes such as "17,13,13,2"')
    p.set_defaults(func=cmd_info)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "hilbert" and args.d is None and not args.hvector and args.cb is None:
        args.hvector = True
    try:
        result = args.func(args)
    except (InputError, DocumentError) as exc:
        print(f"{TOOL} {args.command}: {exc}", file=sys.stderr)
        return 2
    json.dump(result, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
