"""Command-line interface.

Exit codes: 0 success, 1 valid negative outcome (incomplete orbit, no
certificate, subgroup not the stabilizer, failed relation), 2 invalid
input, 3 failed internal verification.
"""

from __future__ import annotations

import argparse
import json
import sys

from .braid import BraidWord, parse_word
from .certify import (
    DEFAULT_K,
    CertificateError,
    InfinityCertificate,
    auroux_divergence,
    certify_infinite,
    verify_certificate,
)
from .coset import DEFAULT_MAX_COSETS, cross_check_index
from .hurwitz import FactorizationError, load
from .orbit import DEFAULT_MAX_VERTICES, enumerate_orbit, export_dot
from .sl2 import ALPHA, BETA, IDENTITY, TwistPower, twist_matrix
from .symplectic import RELATIONS, verify_relation

OK, NEGATIVE, INVALID, VERIFY_FAILED = 0, 1, 2, 3


class InvalidInput(ValueError):
    pass


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _nonnegative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return v


def _genus_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        lo_i = int(lo)
        hi_i = int(hi) if sep else lo_i
    except ValueError:
        raise InvalidInput(f"bad genus range {text!r}") from None
    if lo_i < 1 or hi_i < lo_i:
        raise InvalidInput(f"genus range {text!r} must satisfy 1 <= lo <= hi")
    return range(lo_i, hi_i + 1)


def _load(source: str):
    try:
        return load(source)
    except FactorizationError as exc:
        raise InvalidInput(str(exc)) from None


def _write(path, text):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def cmd_orbit(args) -> int:
    f = _load(args.source)
    if f.n < 2:
        raise InvalidInput("orbit needs at least two entries")
    g = enumerate_orbit(f, args.max_vertices, args.threads)
    print(json.dumps(g.summary()))
    if args.dot:
        _write(args.dot, export_dot(g))
    return OK if g.complete else NEGATIVE


def cmd_export_dot(args) -> int:
    f = _load(args.source)
    if f.n < 2:
        raise InvalidInput("orbit needs at least two entries")
    g = enumerate_orbit(f, args.max_vertices, args.threads)
    text = export_dot(g)
    if args.out:
        _write(args.out, text)
    else:
        sys.stdout.write(text)
    return OK if g.complete else NEGATIVE


def cmd_certify(args) -> int:
    f = _load(args.source)
    if not f.is_lefschetz:
        raise InvalidInput("certification needs positive Dehn twists only")
    try:
        if args.auroux:
            try:
                cert = auroux_divergence(f, f, args.K)
            except (ValueError, FactorizationError) as exc:
                raise InvalidInput(str(exc)) from None
        else:
            cert = certify_infinite(f, args.K)
    except CertificateError as exc:
        print(f"VERIFICATION FAILED: {exc}", file=sys.stderr)
        return VERIFY_FAILED
    if cert is None:
        print("NOT FOUND")
        return NEGATIVE
    text = cert.dumps()
    print(text)
    if args.out:
        _write(args.out, text + "\n")
    return OK


def cmd_verify(args) -> int:
    try:
        with open(args.certificate, encoding="utf-8") as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidInput(f"cannot read certificate: {exc}") from None
    try:
        cert = InfinityCertificate.from_json(obj)
        if args.K is not None:
            cert.K = args.K
        verify_certificate(cert)
    except (KeyError, TypeError, AttributeError, ValueError) as exc:
        raise InvalidInput(f"malformed certificate: {exc}") from None
    except CertificateError as exc:
        print(f"FAIL {exc}")
        return VERIFY_FAILED
    print(f"VALID {cert.strategy} K={cert.K}")
    return OK


def _parse_subgroup(text: str, n: int) -> list[BraidWord]:
    words = [w for w in text.split(",") if w.strip()]
    try:
        return [BraidWord(n, parse_word(w)) for w in words]
    except ValueError as exc:
        raise InvalidInput(str(exc)) from None


def cmd_index(args) -> int:
    f = _load(args.source)
    if f.n < 2:
        raise InvalidInput("index needs at least two entries")
    subgroup = _parse_subgroup(args.sub, f.n)
    report = cross_check_index(f, subgroup, args.max_vertices, args.max_cosets)
    print(json.dumps(report.to_json()))
    return OK if report.verdict else NEGATIVE


def _genus_one_identities():
    ta, tb = twist_matrix(TwistPower(ALPHA)), twist_matrix(TwistPower(BETA))
    ab = ta @ tb
    yield "(TaTb)^3 = -I", ab**3 == -IDENTITY
    yield "(TaTb)^6 = I", ab**6 == IDENTITY


def cmd_verify_relations(args) -> int:
    genera = _genus_range(args.genus)
    ok = True
    for g in genera:
        if g == 1:
            for label, passed in _genus_one_identities():
                print(f"{label} g=1 {'PASS' if passed else 'FAIL'}")
                ok &= passed
        for kind in RELATIONS:
            passed = verify_relation(kind, g)
            print(f"{kind} g={g} {'PASS' if passed else 'FAIL'}")
            ok &= passed
    return OK if ok else NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="monodromy",
        description="Hurwitz orbits, liftable-braid indices and infinite-index certificates "
        "for genus-one Lefschetz fibrations.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def source(p):
        p.add_argument("source", help="builtin id (q:3, E:1, eta1:2, ...) or factorization JSON file")

    def orbit_budget(p):
        p.add_argument("-m", "--max-vertices", type=_positive, default=DEFAULT_MAX_VERTICES)
        p.add_argument("-t", "--threads", type=_positive, default=None,
                       help="worker processes (default: $MONODROMY_THREADS or 1)")

    p = sub.add_parser("orbit", help="enumerate the Hurwitz orbit and print a JSON summary")
    source(p)
    orbit_budget(p)
    p.add_argument("-d", "--dot", help="also write the orbit graph in DOT format")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("export-dot", help="print the orbit graph in DOT format")
    source(p)
    orbit_budget(p)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("certify", help="search for an infinite-index certificate")
    source(p)
    p.add_argument("-K", "--K", type=_nonnegative, default=DEFAULT_K, dest="K",
                   help="replay bound for the distinctness check")
    p.add_argument("-a", "--auroux", action="store_true",
                   help="certify the self fiber sum source # source by intersection growth")
    p.add_argument("-o", "--out", help="also write the certificate JSON here")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify", help="replay a certificate file")
    p.add_argument("certificate")
    p.add_argument("-K", "--K", type=_nonnegative, default=None, dest="K")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("index", help="check that braids generate the stabilizer")
    source(p)
    p.add_argument("-s", "--sub", required=True, help='comma-separated words, e.g. "s1^3, s2 s1 s2^-1"')
    p.add_argument("-m", "--max-vertices", type=_positive, default=DEFAULT_MAX_VERTICES)
    p.add_argument("-c", "--max-cosets", type=_positive, default=DEFAULT_MAX_COSETS)
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("verify-relations", help="check the hyperelliptic relations in Sp(2g,Z)")
    p.add_argument("-g", "--genus", default="2..4", help="genus or range lo..hi")
    p.set_defaults(func=cmd_verify_relations)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INVALID


if __name__ == "__main__":
    sys.exit(main())
