"""Canonical keys for factorizations.

Over the disk a factorization is its exact tuple.  Over the sphere it is
only defined up to simultaneous conjugation by SL2(Z); conjugating by A
sends each curve c to A c.  We move the first curve to (1,0) and then use
the residual stabilizer [[1, m], [0, 1]] (up to -I) to reduce the first
curve not parallel to it to (p, q) with 0 <= p < q.
"""

from __future__ import annotations

from .hurwitz import DISK, SPHERE, Factorization
from .sl2 import (
    IDENTITY,
    IntMatrix2,
    TorusCurve,
    TwistPower,
    apply_vector,
    canonical_sign,
    mat_mul,
    sl2_transporter,
    twist_matrix,
)


def _serialize(tag: str, pairs) -> bytes:
    return (tag + "|" + ";".join(f"{p},{q},{k}" for p, q, k in pairs)).encode("ascii")


def disk_key(f: Factorization) -> bytes:
    if f.base != DISK:
        raise ValueError("disk_key needs a disk factorization")
    return _serialize("D", ((t.curve.p, t.curve.q, t.exponent) for t in f.entries))


def normalizing_matrix(entries) -> IntMatrix2:
    """The conjugator bringing ``entries`` to canonical position."""
    if not entries:
        return IDENTITY
    first = entries[0].curve
    A = sl2_transporter(first)
    for t in entries[1:]:
        p, q = apply_vector(A, t.curve.p, t.curve.q)
        if q == 0:
            continue
        if q < 0:
            p, q = -p, -q
        # [[1, m], [0, 1]] sends (p, q) to (p + m q, q)
        m = -(p // q)
        return mat_mul(IntMatrix2(1, m, 0, 1), A)
    return A


def conjugacy_key(entries, tag: str = "S") -> bytes:
    A = normalizing_matrix(entries)
    pairs = []
    for t in entries:
        p, q = canonical_sign(*apply_vector(A, t.curve.p, t.curve.q))
        pairs.append((p, q, t.exponent))
    return _serialize(tag, pairs)


def sphere_key(f: Factorization) -> bytes:
    if f.base != SPHERE:
        raise ValueError("sphere_key needs a sphere factorization")
    return conjugacy_key(f.entries)


def key(f: Factorization) -> bytes:
    return disk_key(f) if f.base == DISK else sphere_key(f)


def trace_prehash(f: Factorization) -> list[int]:
    """Traces of all prefix products, then of all adjacent-pair products."""
    mats = [twist_matrix(t) for t in f.entries]
    out = []
    acc = IDENTITY
    for M in mats:
        acc = mat_mul(acc, M)
        out.append(acc.trace())
    out.extend(mat_mul(a, b).trace() for a, b in zip(mats, mats[1:]))
    return out


def key_from_hex(text: str) -> bytes:
    return bytes.fromhex(text)


def parse_key(k: bytes) -> tuple[str, list[TwistPower]]:
    tag, _, body = k.decode("ascii").partition("|")
    entries = []
    for item in filter(None, body.split(";")):
        p, q, e = map(int, item.split(","))
        entries.append(TwistPower(TorusCurve(p, q), e))
    return tag, entries
