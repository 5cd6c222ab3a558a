"""Command-line interface.

Subcommands::

    stats        print every statistic of one word
    shuffles     stream all shuffles of two words
    dist         distribution of a statistic over all shuffles
    verify       shuffle-compatibility sweep with PASS/FAIL verdict
    canonicalize rebalance a word to its canonical form, optionally carrying
                 a whole shuffle set along the chain
    phi          apply the shuffle transport (or its inverse) once
    stanley      check one of the two maj shuffle identities

Exit codes: 0 success, 1 a verification reported FAIL, 2 usage error, 141
when the output pipe closes early (``permshuffle ... | head``).  Output is
deterministic; ``--jobs`` never changes bytes, only wall time.  Commands that
enumerate shuffles refuse n + m > 14 unless ``--force`` is given.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .bijection import canonicalize, canonicalize_with_bijection, transport, transport_inverse
from .canonical import classify
from .core import Permutation, descent_stats, parse_word, peak_stats, run_profile, stat_bundle
from .qseries import maj_shuffle_identity, restricted_maj_shuffle_identity
from .shuffles import distribution, enumerate_shuffles, verify_shuffle_compatibility
from .stats import serialize_value

STREAM_LIMIT = 14


def _perm(text: str) -> Permutation:
    return parse_word(text)


def _check_stream_size(total: int, force: bool) -> None:
    if total > STREAM_LIMIT and not force:
        raise ValueError(
            f"{total} entries exceed the streaming limit of {STREAM_LIMIT}; "
            "pass --force to enumerate anyway"
        )


def _set_text(values: tuple[int, ...]) -> str:
    return serialize_value(values) if values else "-"


def cmd_stats(args: argparse.Namespace) -> int:
    p = _perm(args.perm)
    bundle = stat_bundle(p)
    profile = run_profile(p)
    named = None
    if len(p) >= 2:
        named = classify(p)
    if args.json:
        payload = {
            "word": list(p.values),
            "n": bundle.n,
            "des_set": list(bundle.des_set),
            "des": bundle.des,
            "maj": bundle.maj,
            "pk_set": list(bundle.pk_set),
            "pk": bundle.pk,
            "epk": bundle.epk,
            "bir": bundle.bir,
            "udr": bundle.udr,
            "chi_plus": bundle.chi_plus,
            "chi_minus": bundle.chi_minus,
            "profile": {"lengths": list(profile.lengths), "chi_plus": profile.chi_plus},
            "classification": None
            if named is None
            else {
                "class_id": named.class_id,
                "k": named.k,
                "d": named.d,
                "is_canonical": named.is_canonical,
            },
        }
        print(json.dumps(payload, sort_keys=True))
        return 0
    print(f"word {p.word()}")
    print(f"n {bundle.n}")
    print(f"des_set {_set_text(bundle.des_set)}")
    print(f"des {bundle.des}")
    print(f"maj {bundle.maj}")
    print(f"pk_set {_set_text(bundle.pk_set)}")
    print(f"pk {bundle.pk}")
    print(f"epk {bundle.epk}")
    print(f"bir {bundle.bir}")
    print(f"udr {bundle.udr}")
    print(f"chi_plus {bundle.chi_plus}")
    print(f"chi_minus {bundle.chi_minus}")
    print(f"profile {profile.serialize()}")
    if named is not None:
        print(f"class {named.class_id}")
        print(f"class_k {named.k}")
        print(f"class_d {named.d}")
        print(f"canonical {'yes' if named.is_canonical else 'no'}")
    return 0


def cmd_shuffles(args: argparse.Namespace) -> int:
    p, s = _perm(args.perm), _perm(args.sigma)
    _check_stream_size(len(p) + len(s), args.force)
    words = enumerate_shuffles(p, s, force=args.force)
    if args.json:
        shuffles = [list(tau.values) for tau in words]
        print(json.dumps({"count": len(shuffles), "shuffles": shuffles}))
        return 0
    for tau in words:
        print(tau.word())
    return 0


def cmd_dist(args: argparse.Namespace) -> int:
    p, s = _perm(args.perm), _perm(args.sigma)
    _check_stream_size(len(p) + len(s), args.force)
    dist = distribution(args.stat, p, s, force=args.force)
    if args.json:
        payload = {
            "stat": args.stat,
            "pairs": dist.to_json(),
            "total": dist.total,
            "digest": dist.digest(),
        }
        print(json.dumps(payload))
        return 0
    print(dist.serialize())
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    report = verify_shuffle_compatibility(
        args.stat,
        args.n,
        args.m,
        mode=args.mode,
        memoize=not args.no_memoize,
        jobs=args.jobs,
    )
    if args.json:
        print(json.dumps(report.to_json(), sort_keys=True))
    else:
        print(report.to_text())
    return 0 if report.passed else 1


def cmd_canonicalize(args: argparse.Namespace) -> int:
    p = _perm(args.perm)
    mapping = None
    if args.sigma is not None:
        s = _perm(args.sigma)
        _check_stream_size(len(p) + len(s), args.force)
        trace, mapping = canonicalize_with_bijection(p, s)
    else:
        trace = canonicalize(p)
    if args.json:
        payload = {
            "steps": [
                {
                    "ell": step.ell,
                    "src": list(step.source.values),
                    "dst": list(step.target.values),
                }
                for step in trace.steps
            ],
            "final": list(trace.final.values),
            "mapping": None
            if mapping is None
            else [[list(tau.values), list(image.values)] for tau, image in mapping.items()],
        }
        print(json.dumps(payload))
        return 0
    for step in trace.steps:
        print(step.serialize())
    print(f"final {trace.final.word()}")
    if mapping is not None:
        for tau, image in mapping.items():
            print(f"{tau.word()} -> {image.word()}")
    return 0


def cmd_phi(args: argparse.Namespace) -> int:
    tau = _perm(args.tau)
    p = _perm(args.pi)
    p_prime = _perm(args.pi_prime)
    move = transport_inverse if args.inverse else transport
    result = move(tau, p, p_prime, args.ell)
    if args.json:
        print(json.dumps({"result": list(result.values)}))
    else:
        print(result.word())
    return 0


def cmd_stanley(args: argparse.Namespace) -> int:
    p, s = _perm(args.perm), _perm(args.sigma)
    _check_stream_size(len(p) + len(s), args.force)
    if args.eq == 1:
        if args.k is not None:
            raise ValueError("--k applies only to --eq 2")
        check = maj_shuffle_identity(p, s)
    else:
        if args.k is None:
            raise ValueError("--eq 2 requires --k")
        check = restricted_maj_shuffle_identity(p, s, args.k)
    if args.json:
        payload = {
            "eq": args.eq,
            "k": args.k,
            "lhs": [list(pair) for pair in check.lhs.pairs],
            "lhs_text": check.lhs.text(),
            "rhs": [list(pair) for pair in check.rhs.pairs],
            "rhs_text": check.rhs.text(),
            "holds": check.holds,
        }
        print(json.dumps(payload))
    else:
        print(f"lhs {check.lhs.text()}")
        print(f"rhs {check.rhs.text()}")
        print(f"verdict {'PASS' if check.holds else 'FAIL'}")
    return 0 if check.holds else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permshuffle",
        description="Permutation statistics over shuffle sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("stats", help="print every statistic of one word")
    sp.add_argument("perm", help="whitespace-separated distinct positive integers")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(handler=cmd_stats)

    sp = sub.add_parser("shuffles", help="stream all shuffles of two words")
    sp.add_argument("perm")
    sp.add_argument("sigma")
    sp.add_argument("--force", action="store_true", help="ignore the size limit")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(handler=cmd_shuffles)

    sp = sub.add_parser("dist", help="distribution of a statistic over all shuffles")
    sp.add_argument("perm")
    sp.add_argument("sigma")
    sp.add_argument("--stat", required=True)
    sp.add_argument("--force", action="store_true")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(handler=cmd_dist)

    sp = sub.add_parser("verify", help="shuffle-compatibility sweep")
    sp.add_argument("--stat", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--mode", choices=["reduced", "full"], default="reduced")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--no-memoize", action="store_true")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(handler=cmd_verify)

    sp = sub.add_parser("canonicalize", help="rebalance a word to canonical form")
    sp.add_argument("perm")
    sp.add_argument("--sigma", help="also print the composed shuffle bijection")
    sp.add_argument("--force", action="store_true")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(handler=cmd_canonicalize)

    sp = sub.add_parser("phi", help="apply the shuffle transport once")
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("--pi", required=True)
    sp.add_argument("--pi-prime", dest="pi_prime", required=True)
    sp.add_argument("--tau", required=True)
    sp.add_argument("--inverse", action="store_true")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(handler=cmd_phi)

    sp = sub.add_parser("stanley", help="check a maj shuffle identity")
    sp.add_argument("perm")
    sp.add_argument("sigma")
    sp.add_argument("--eq", type=int, choices=[1, 2], required=True)
    sp.add_argument("--k", type=int)
    sp.add_argument("--force", action="store_true")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(handler=cmd_stanley)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.handler(args)
    except BrokenPipeError:
        # the reader went away; hand stdout to devnull so the interpreter's
        # shutdown flush stays quiet, then exit with the SIGPIPE convention
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 141
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
