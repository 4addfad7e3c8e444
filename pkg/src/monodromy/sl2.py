"""Exact SL2(Z) arithmetic on the torus.

Curves are primitive integer vectors up to sign, Dehn twists are
transvections ``T_c^k(v) = v + k<v,c>c`` with ``<(a,b),(p,q)> = aq - bp``.
With this convention the twist about (1,0) is [[1,-1],[0,1]] and the twist
about (0,1) is [[1,0],[1,1]].
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt


@dataclass(frozen=True)
class IntMatrix2:
    a: int
    b: int
    c: int
    d: int

    def __matmul__(self, other: "IntMatrix2") -> "IntMatrix2":
        return mat_mul(self, other)

    def __neg__(self) -> "IntMatrix2":
        return IntMatrix2(-self.a, -self.b, -self.c, -self.d)

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def trace(self) -> int:
        return self.a + self.d

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    @classmethod
    def from_rows(cls, rows) -> "IntMatrix2":
        (a, b), (c, d) = rows
        m = cls(int(a), int(b), int(c), int(d))
        if m.det() != 1:
            raise ValueError(f"matrix {rows} is not in SL2(Z)")
        return m

    def __pow__(self, k: int) -> "IntMatrix2":
        base = self if k >= 0 else mat_inv(self)
        k = abs(k)
        out = IDENTITY
        while k:
            if k & 1:
                out = mat_mul(out, base)
            base = mat_mul(base, base)
            k >>= 1
        return out


IDENTITY = IntMatrix2(1, 0, 0, 1)


def mat_mul(A: IntMatrix2, B: IntMatrix2) -> IntMatrix2:
    return IntMatrix2(
        A.a * B.a + A.b * B.c,
        A.a * B.b + A.b * B.d,
        A.c * B.a + A.d * B.c,
        A.c * B.b + A.d * B.d,
    )


def mat_inv(A: IntMatrix2) -> IntMatrix2:
    # adjugate; valid because det(A) = 1
    return IntMatrix2(A.d, -A.b, -A.c, A.a)


def canonical_sign(p: int, q: int) -> tuple[int, int]:
    if p < 0 or (p == 0 and q < 0):
        return -p, -q
    return p, q


@dataclass(frozen=True, order=True)
class TorusCurve:
    """Isotopy class of an essential simple closed curve on the torus.

    Stored as a primitive pair whose first nonzero coordinate is positive.
    """

    p: int
    q: int

    def __post_init__(self):
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"({self.p},{self.q}) is not a primitive vector")
        if canonical_sign(self.p, self.q) != (self.p, self.q):
            raise ValueError(f"({self.p},{self.q}) is not sign-canonical; use TorusCurve.of")

    @classmethod
    def of(cls, p: int, q: int) -> "TorusCurve":
        return cls(*canonical_sign(int(p), int(q)))

    def to_json(self) -> list[int]:
        return [self.p, self.q]

    def __str__(self) -> str:
        return f"({self.p},{self.q})"


ALPHA = TorusCurve(1, 0)
BETA = TorusCurve(0, 1)


@dataclass(frozen=True, order=True)
class TwistPower:
    curve: TorusCurve
    exponent: int = 1

    def __post_init__(self):
        if self.exponent == 0:
            raise ValueError("twist exponent must be nonzero")

    def to_json(self) -> dict:
        return {"curve": self.curve.to_json(), "power": self.exponent}

    @classmethod
    def from_json(cls, obj) -> "TwistPower":
        p, q = obj["curve"]
        return cls(TorusCurve.of(p, q), int(obj.get("power", 1)))


def twist_matrix(t: TwistPower) -> IntMatrix2:
    p, q, k = t.curve.p, t.curve.q, t.exponent
    return IntMatrix2(1 + k * p * q, -k * p * p, k * q * q, 1 - k * p * q)


def apply_vector(A: IntMatrix2, p: int, q: int) -> tuple[int, int]:
    return A.a * p + A.b * q, A.c * p + A.d * q


def apply_to_curve(A: IntMatrix2, c: TorusCurve) -> TorusCurve:
    # SL2(Z) preserves primitivity, so only the sign needs fixing
    return TorusCurve(*canonical_sign(*apply_vector(A, c.p, c.q)))


def intersection(c1: TorusCurve, c2: TorusCurve) -> int:
    return abs(c1.p * c2.q - c1.q * c2.p)


def intersection_growth(c: TorusCurve, d: TorusCurve, k: int) -> int:
    """Return i(d, T_c^k d), checked against |k| i(c,d)^2."""
    if k == 0:
        return 0
    image = apply_to_curve(twist_matrix(TwistPower(c, k)), d)
    value = intersection(d, image)
    expected = abs(k) * intersection(c, d) ** 2
    assert value == expected, (c, d, k, value, expected)
    return value


IDENTITY_TWIST = "identity"
NOT_A_TWIST = "not a twist power"


def recognize_twist(A: IntMatrix2):
    """Inverse of :func:`twist_matrix`.

    Returns a TwistPower, or one of the strings ``"identity"`` and
    ``"not a twist power"``.
    """
    if A == IDENTITY:
        return IDENTITY_TWIST
    if A.det() != 1 or A.trace() != 2:
        return NOT_A_TWIST
    # A - I = k [[pq, -p^2], [q^2, -pq]]
    m11, m12, m21 = A.a - 1, A.b, A.c
    k = gcd(m12, m21)  # p^2 and q^2 are coprime
    if m21 != 0:
        k = k if m21 > 0 else -k
    else:
        k = k if m12 < 0 else -k
    if m12 % k or m21 % k or m11 % k:
        return NOT_A_TWIST
    p2, q2, pq = -m12 // k, m21 // k, m11 // k
    if p2 < 0 or q2 < 0:
        return NOT_A_TWIST
    p, q = isqrt(p2), isqrt(q2)
    if p * p != p2 or q * q != q2 or gcd(p, q) != 1:
        return NOT_A_TWIST
    if pq < 0:
        q = -q
    t = TwistPower(TorusCurve.of(p, q), k)
    if twist_matrix(t) != A:
        return NOT_A_TWIST
    return t


def sl2_transporter(c: TorusCurve) -> IntMatrix2:
    """A matrix in SL2(Z) sending ``c`` to (1,0)."""
    p, q = c.p, c.q
    u, v = _bezout(p, q)
    return IntMatrix2(u, v, -q, p)


def _bezout(p: int, q: int) -> tuple[int, int]:
    # u p + v q = 1 for primitive (p, q)
    old_r, r = p, q
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        quo = old_r // r
        old_r, r = r, old_r - quo * r
        old_s, s = s, old_s - quo * s
        old_t, t = t, old_t - quo * t
    if old_r < 0:
        old_s, old_t = -old_s, -old_t
    return old_s, old_t
