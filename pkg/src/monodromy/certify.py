"""Certificates of infinite Hurwitz orbits.

A certificate picks a sub-tuple of a factorization (the vanishing cycles of
a spider), prepares it with a braid word on that sub-tuple, and names a
generator exchanging two adjacent curves with intersection number >= 2.
Powers of that exchange act on the pair through the Artin action of B_2 on
the free group the two twists generate, so their images are pairwise
distinct.  Over the sphere, entries the exchange never touches act as a
marking: curves with nonzero intersection pin any conjugator to +-I.

Replay recomputes the images for k = 0..K and checks their keys are
pairwise distinct.  This guards the implementation; it is not the proof.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .braid import format_braid, parse_word
from .canonical import conjugacy_key, disk_key
from .hurwitz import (
    DISK,
    SPHERE,
    Factorization,
    apply_letters,
    fiber_sum,
)
from .sl2 import (
    IDENTITY,
    TorusCurve,
    TwistPower,
    apply_to_curve,
    intersection,
    intersection_growth,
    twist_matrix,
)

DEFAULT_K = 50

# s2 s1^2 s4: (a,b,a,b,a) -> (b, b, T_a b, T_b a, b)
FIVE_CYCLE_WORD = (2, 1, 1, 4)
# s3^-1 s5 on (a,b,b,a,a,b,b,a) -> (a, b, a, T_b a, T_a b, a, b, a)
EIGHT_PATTERN_WORD = (-3, 5)


class CertificateError(RuntimeError):
    pass


@dataclass(frozen=True)
class SpiderPattern:
    """Equality classes by label plus intersection constraints between classes.

    ``constraints`` maps an unordered label pair to ``("eq", v)`` or
    ``("ge", v)``.  Positions sharing a label carry the same curve.
    """

    labels: str
    constraints: dict = field(default_factory=dict)

    def __post_init__(self):
        norm = {}
        for pair, (op, v) in dict(self.constraints).items():
            a, b = pair
            if a == b:
                raise ValueError("a class is equal to itself; constrain distinct labels")
            if op not in ("eq", "ge"):
                raise ValueError(f"unknown constraint {op!r}")
            norm[frozenset((a, b))] = (op, v)
        object.__setattr__(self, "constraints", norm)

    def __len__(self) -> int:
        return len(self.labels)

    @classmethod
    def alternating(cls, k: int, value: int = 1) -> "SpiderPattern":
        return cls(("ab" * k)[:k], {("a", "b"): ("eq", value)} if k > 1 else {})

    def satisfied(self, a: str, b: str, i: int) -> bool:
        c = self.constraints.get(frozenset((a, b)))
        if c is None:
            return True
        op, v = c
        return i == v if op == "eq" else i >= v


PAIR_GE2 = SpiderPattern("ab", {("a", "b"): ("ge", 2)})
QUAD_GE2 = SpiderPattern("abab", {("a", "b"): ("ge", 2)})
FIVE_ALT = SpiderPattern.alternating(5)
TEN_ALT = SpiderPattern.alternating(10)
EIGHT_ETA1 = SpiderPattern("abbaabba", {("a", "b"): ("eq", 1)})


def find_pattern(f: Factorization, p: SpiderPattern, limit: int | None = None) -> list[tuple[int, ...]]:
    """Increasing 1-based position tuples whose curves match ``p``.

    Depth-first in lexicographic order, pruning on every constraint that
    involves an already placed class.
    """
    curves = f.curves()
    n, k = len(curves), len(p)
    out: list[tuple[int, ...]] = []
    if k == 0:
        return [()]
    chosen: list[int] = []
    assigned: dict[str, TorusCurve] = {}

    def extend(start: int) -> bool:
        depth = len(chosen)
        if depth == k:
            out.append(tuple(c + 1 for c in chosen))
            return limit is not None and len(out) >= limit
        lab = p.labels[depth]
        for pos in range(start, n - (k - depth) + 1):
            c = curves[pos]
            fresh = lab not in assigned
            if not fresh:
                if assigned[lab] != c:
                    continue
            else:
                if not all(p.satisfied(lab, other, intersection(c, oc)) for other, oc in assigned.items()):
                    continue
                assigned[lab] = c
            chosen.append(pos)
            stop = extend(pos + 1)
            chosen.pop()
            if fresh:
                del assigned[lab]
            if stop:
                return True
        return False

    extend(0)
    return out


def transform_5cycle(sub: Factorization) -> Factorization:
    """Apply s2 s1^2 s4 to a sub-tuple of type (a, b, a, b, a), i(a, b) = 1."""
    cs = sub.curves()
    if len(cs) != 5 or not find_pattern(sub, FIVE_ALT, limit=1):
        raise ValueError(f"expected a 5-tuple of type (a,b,a,b,a) with i(a,b)=1, got {sub}")
    return apply_letters(sub, FIVE_CYCLE_WORD)


@dataclass
class InfinityCertificate:
    strategy: str
    base: str
    factorization: Factorization
    positions: tuple[int, ...]
    preparation: tuple[int, ...] = ()
    separator: tuple[int, ...] = ()
    marking: tuple[int, ...] = ()
    invariant: str = ""
    K: int = DEFAULT_K

    @property
    def sub_tuple(self) -> Factorization:
        return self.factorization.sub(self.positions)

    def to_json(self) -> dict:
        return {
            "strategy": self.strategy,
            "base": self.base,
            "factorization": self.factorization.to_json(),
            "positions": list(self.positions),
            "sub_tuple": [t.to_json() for t in self.sub_tuple.entries],
            "preparation": format_braid(self.preparation),
            "separator": format_braid(self.separator),
            "marking": list(self.marking),
            "invariant": self.invariant,
            "K": self.K,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    @classmethod
    def from_json(cls, obj) -> "InfinityCertificate":
        f = Factorization.from_json(obj["factorization"])
        cert = cls(
            strategy=obj["strategy"],
            base=obj["base"],
            factorization=f,
            positions=tuple(obj["positions"]),
            preparation=parse_word(obj.get("preparation", "")),
            separator=parse_word(obj.get("separator", "")),
            marking=tuple(obj.get("marking", ())),
            invariant=obj.get("invariant", ""),
            K=int(obj.get("K", DEFAULT_K)),
        )
        stored = obj.get("sub_tuple")
        if stored is not None:
            if [TwistPower.from_json(e) for e in stored] != list(cert.sub_tuple.entries):
                raise CertificateError("stored sub-tuple does not match the factorization")
        return cert


def _sub_key(g: Factorization) -> bytes:
    return disk_key(g) if g.base == DISK else conjugacy_key(g.entries)


def _replay_spider(cert: InfinityCertificate) -> None:
    if cert.base != cert.factorization.base:
        raise CertificateError("certificate base disagrees with its factorization")
    pos = cert.positions
    if list(pos) != sorted(set(pos)) or not pos or pos[0] < 1 or pos[-1] > cert.factorization.n:
        raise CertificateError(f"bad positions {pos}")
    try:
        prepared = apply_letters(cert.sub_tuple, cert.preparation)
    except IndexError as exc:
        raise CertificateError(f"preparation word does not fit the sub-tuple: {exc}") from None
    if len(cert.separator) != 1:
        raise CertificateError("separator must be a single generator")
    j = abs(cert.separator[0])
    cs = prepared.curves()
    if not 1 <= j < len(cs):
        raise CertificateError(f"separator s{j} out of range")
    if intersection(cs[j - 1], cs[j]) < 2:
        raise CertificateError(f"exchanged pair {cs[j - 1]}, {cs[j]} has intersection < 2")
    if cert.base == SPHERE:
        mark = cert.marking
        if len(mark) != 2 or set(mark) & {j, j + 1} or not all(1 <= m <= len(cs) for m in mark):
            raise CertificateError("sphere certificates need two marking entries off the exchanged pair")
        if intersection(cs[mark[0] - 1], cs[mark[1] - 1]) < 1:
            raise CertificateError("marking curves are disjoint and cannot pin the conjugator")
    seen = {}
    g = prepared
    for k in range(cert.K + 1):
        kk = _sub_key(g)
        if kk in seen:
            raise CertificateError(f"sigma^{seen[kk]} and sigma^{k} give the same class")
        seen[kk] = k
        g = apply_letters(g, cert.separator)


def _replay_auroux(cert: InfinityCertificate) -> None:
    f = cert.factorization
    n = f.n // 2
    first, second = f.entries[:n], f.entries[n:]
    if f.n % 2 or first != second:
        raise CertificateError("Auroux certificates are for self fiber sums")
    if len(cert.positions) != 2 or not all(1 <= p <= n for p in cert.positions):
        raise CertificateError(f"bad pair {cert.positions}")
    i, j = cert.positions
    ci, cj = first[i - 1].curve, first[j - 1].curve
    base_i = intersection(ci, cj)
    if base_i < 1:
        raise CertificateError("chosen pair does not intersect")
    prev = -1
    for k in range(cert.K + 1):
        M = twist_matrix(TwistPower(ci, k)) if k else IDENTITY
        moved = [TwistPower(apply_to_curve(M, t.curve), t.exponent) for t in second]
        g = Factorization(f.base, first + tuple(moved), partial=f.partial)
        if g.product != f.product:
            raise CertificateError("conjugated block changed the total product")
        value = intersection(g.entries[j - 1].curve, g.entries[n + j - 1].curve)
        if value != k * base_i**2 or value <= prev:
            raise CertificateError(f"intersection invariant failed at k={k}: {value}")
        if k:
            intersection_growth(ci, cj, k)
        prev = value


def verify_certificate(cert: InfinityCertificate) -> None:
    """Recompute the certificate from scratch; raise CertificateError on failure."""
    if cert.K < 0:
        raise CertificateError("K must be nonnegative")
    if cert.strategy == "AUROUX":
        _replay_auroux(cert)
    elif cert.strategy in ("S1", "S2", "S3"):
        _replay_spider(cert)
    else:
        raise CertificateError(f"unknown strategy {cert.strategy!r}")


def _shift(word, by):
    return tuple(x + by if x > 0 else x - by for x in word)


def _candidates(f: Factorization):
    if f.base == DISK:
        for pos in find_pattern(f, PAIR_GE2, limit=1):
            yield "S1", pos, (), (1,), (), "exchange of a pair with i >= 2 generates a free B_2-orbit"
        for pos in find_pattern(f, FIVE_ALT, limit=1):
            yield ("S2", pos, FIVE_CYCLE_WORD, (3,), (),
                   "s2 s1^2 s4 turns (a,b,a,b,a) into (b,b,T_a b,T_b a,b); i(T_a b,T_b a) = 2")
    else:
        for pos in find_pattern(f, QUAD_GE2, limit=1):
            yield ("S1", pos, (), (1,), (3, 4),
                   "(c,d,c,d), i(c,d) >= 2: exchange the first pair, the second pair marks")
        for pos in find_pattern(f, TEN_ALT, limit=1):
            yield ("S2", pos, FIVE_CYCLE_WORD + _shift(FIVE_CYCLE_WORD, 5), (3,), (8, 9),
                   "two five-cycle transforms give pairs (T_a b,T_b a) and (T_b a,T_a b); "
                   "exchange the first, the second marks")
        for pos in find_pattern(f, EIGHT_ETA1, limit=1):
            yield ("S3", pos, EIGHT_PATTERN_WORD, (4,), (1, 2),
                   "(a,b,b,a,a,b,b,a) -> (a,b,a,T_b a,T_a b,a,b,a); exchange entries 4,5, "
                   "the untouched leading pair (a,b) marks")


def certify_infinite(f: Factorization, K: int = DEFAULT_K) -> InfinityCertificate | None:
    """First certificate found by strategies S1, S2, S3 in that order, or None."""
    if not f.is_lefschetz:
        raise ValueError("certification needs a factorization of positive Dehn twists")
    for strategy, pos, prep, sep, mark, text in _candidates(f):
        cert = InfinityCertificate(strategy, f.base, f, tuple(pos), prep, sep, mark, text, K)
        try:
            verify_certificate(cert)
        except CertificateError as exc:
            raise CertificateError(f"{strategy} certificate failed replay: {exc}") from exc
        return cert
    return None


def auroux_divergence(f: Factorization, g: Factorization, K: int = DEFAULT_K) -> InfinityCertificate | None:
    """Certificate for the self fiber sum f # f from intersection growth.

    By Auroux's lemma f # f is Hurwitz equivalent to f # (T_c^k f T_c^-k) for
    a twist T_c of f; i(d, T_c^k d) = k i(c, d)^2 separates the classes.
    """
    if f != g:
        raise ValueError("auroux_divergence is for self fiber sums (f = g)")
    if f.product not in (IDENTITY, -IDENTITY):
        raise ValueError("Auroux's lemma needs a factorization of a central element")
    cs = f.curves()
    pair = next(
        ((i + 1, j + 1) for i in range(len(cs)) for j in range(i + 1, len(cs)) if intersection(cs[i], cs[j])),
        None,
    )
    if pair is None:
        return None
    total = fiber_sum(f, g)
    cert = InfinityCertificate(
        "AUROUX", f.base, total, pair,
        invariant="i(d_j, T_{d_i}^k d_j) = k i(d_i, d_j)^2 between the two copies",
        K=K,
    )
    verify_certificate(cert)
    return cert
