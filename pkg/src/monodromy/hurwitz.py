"""Monodromy factorizations and the Hurwitz action of braids on them."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import reduce
from pathlib import Path

from .braid import BraidWord
from .sl2 import (
    ALPHA,
    BETA,
    IDENTITY,
    IntMatrix2,
    TwistPower,
    apply_to_curve,
    mat_inv,
    mat_mul,
    recognize_twist,
    twist_matrix,
)

DISK = "disk"
SPHERE = "sphere"
BASES = (DISK, SPHERE)


class FactorizationError(ValueError):
    pass


@dataclass(frozen=True)
class Factorization:
    """An ordered tuple of twist powers over a disk or a sphere.

    ``partial`` marks torus-curve data restricted from a larger fibration
    (for instance the alpha_1/alpha_2 entries of a genus-g hyperelliptic
    factorization).  Such tuples need not multiply to the identity in SL2(Z)
    even over the sphere.
    """

    base: str
    entries: tuple[TwistPower, ...]
    partial: bool = False
    _product: IntMatrix2 = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.base not in BASES:
            raise FactorizationError(f"unknown base {self.base!r}")
        object.__setattr__(self, "entries", tuple(self.entries))
        prod = reduce(mat_mul, (twist_matrix(t) for t in self.entries), IDENTITY)
        object.__setattr__(self, "_product", prod)
        if self.base == SPHERE and not self.partial and prod != IDENTITY:
            raise FactorizationError(
                f"sphere factorization must multiply to the identity, got {prod.rows()}"
            )

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def product(self) -> IntMatrix2:
        return self._product

    @property
    def is_lefschetz(self) -> bool:
        return all(t.exponent == 1 for t in self.entries)

    def curves(self):
        return [t.curve for t in self.entries]

    def with_entries(self, entries) -> "Factorization":
        # Hurwitz moves keep the product, so skip the sphere re-check cost
        out = object.__new__(Factorization)
        object.__setattr__(out, "base", self.base)
        object.__setattr__(out, "entries", tuple(entries))
        object.__setattr__(out, "partial", self.partial)
        object.__setattr__(out, "_product", self._product)
        return out

    def sub(self, positions) -> "Factorization":
        """Sub-tuple at 1-based ``positions`` (no closure requirement)."""
        return Factorization(self.base, [self.entries[p - 1] for p in positions], partial=True)

    def conjugate(self, A: IntMatrix2) -> "Factorization":
        return Factorization(
            self.base,
            [TwistPower(apply_to_curve(A, t.curve), t.exponent) for t in self.entries],
            partial=self.partial,
        )

    def to_json(self) -> dict:
        out = {"base": self.base, "entries": [t.to_json() for t in self.entries]}
        if self.partial:
            out["partial"] = True
        return out

    @classmethod
    def from_json(cls, obj) -> "Factorization":
        base = obj.get("base")
        entries = []
        for e in obj["entries"]:
            if "matrix" in e:
                t = recognize_twist(IntMatrix2.from_rows(e["matrix"]))
                if not isinstance(t, TwistPower):
                    raise FactorizationError(f"entry {e['matrix']} is {t}, not a twist power")
                entries.append(t)
            else:
                entries.append(TwistPower.from_json(e))
        return cls(base, entries, partial=bool(obj.get("partial", False)))

    def __str__(self) -> str:
        body = ", ".join(
            str(t.curve) + ("" if t.exponent == 1 else f"^{t.exponent}") for t in self.entries
        )
        return f"{self.base}[{body}]"


def _act(t: TwistPower, u: TwistPower, power: int = 1) -> TwistPower:
    # t^power applied to the curve of u
    M = twist_matrix(t)
    if power < 0:
        M = mat_inv(M)
    return TwistPower(apply_to_curve(M, u.curve), u.exponent)


def _move_entries(entries: list, i: int, sign: int):
    # in-place on a list; i is 1-based
    x, y = entries[i - 1], entries[i]
    if sign > 0:
        entries[i - 1], entries[i] = _act(x, y), x
    else:
        entries[i - 1], entries[i] = y, _act(y, x, -1)


def hurwitz_move(f: Factorization, i: int, direction: int | str = 1) -> Factorization:
    """Apply s_i (``direction`` +1/"forward") or s_i^-1 (-1/"inverse")."""
    if not 1 <= i <= f.n - 1:
        raise IndexError(f"generator s{i} out of range for {f.n} entries")
    sign = {"forward": 1, "inverse": -1, 1: 1, -1: -1}[direction]
    entries = list(f.entries)
    _move_entries(entries, i, sign)
    return f.with_entries(entries)


def apply_letters(f: Factorization, letters) -> Factorization:
    entries = list(f.entries)
    n = len(entries)
    for x in reversed(letters):
        if not 1 <= abs(x) <= n - 1:
            raise IndexError(f"generator s{abs(x)} out of range for {n} entries")
        _move_entries(entries, abs(x), 1 if x > 0 else -1)
    return f.with_entries(entries)


def apply_braid(f: Factorization, b: BraidWord) -> Factorization:
    """Left Hurwitz action; the rightmost letter of ``b`` acts first."""
    if b.n != f.n:
        raise ValueError(f"braid on {b.n} strands cannot act on {f.n} entries")
    return apply_letters(f, b.letters)


def total_product(f: Factorization) -> IntMatrix2:
    return reduce(mat_mul, (twist_matrix(t) for t in f.entries), IDENTITY)


def fiber_sum(f1: Factorization, f2: Factorization) -> Factorization:
    if f1.base != f2.base:
        raise FactorizationError("fiber sum needs equal bases")
    if f1.partial or f2.partial:
        raise FactorizationError("fiber sum of restricted spider data is undefined")
    # the sphere constructor re-checks the product
    return Factorization(f1.base, f1.entries + f2.entries)


def alternating(n: int, first=ALPHA, second=BETA) -> list[TwistPower]:
    return [TwistPower(first if k % 2 == 0 else second) for k in range(n)]


def hyperelliptic_word(kind: str, g: int) -> list[int]:
    """Chain indices (1..2g+1) of the hyperelliptic relation words."""
    if kind == "eta1":
        half = list(range(1, 2 * g + 2)) + list(range(2 * g + 1, 0, -1))
        return half * 2
    if kind == "eta2":
        return list(range(1, 2 * g + 1)) * (2 * (2 * g + 1))
    if kind == "eta3":
        return list(range(1, 2 * g + 2)) * (2 * g + 2)
    raise ValueError(f"unknown relation {kind!r}")


def builtin(name: str) -> Factorization:
    """Named factorizations.

    ``q:n``        alternating (T_a, T_b, T_a, ...) over the disk;
    ``E:d``        (T_a, T_b)^(6d) over the sphere;
    ``eta1:g`` ... the alpha_1/alpha_2 entries of the genus-g hyperelliptic
                   factorization, as torus curves (partial sphere data).
    """
    try:
        kind, arg = name.split(":")
        k = int(arg)
    except ValueError:
        raise FactorizationError(f"unknown builtin {name!r}") from None
    if kind == "q":
        if k < 1:
            raise FactorizationError("q:n needs n >= 1")
        return Factorization(DISK, alternating(k))
    if kind == "E":
        if k < 1:
            raise FactorizationError("E:d needs d >= 1")
        return Factorization(SPHERE, alternating(12 * k))
    if kind in ("eta1", "eta2", "eta3"):
        if k < 2:
            raise FactorizationError(f"{kind}:g needs g >= 2")
        curve = {1: ALPHA, 2: BETA}
        entries = [TwistPower(curve[c]) for c in hyperelliptic_word(kind, k) if c in curve]
        return Factorization(SPHERE, entries, partial=True)
    raise FactorizationError(f"unknown builtin {name!r}")


def load(source: str) -> Factorization:
    """Builtin id or path to a factorization JSON file."""
    if ":" in source and not Path(source).exists():
        return builtin(source)
    try:
        with open(source, encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise FactorizationError(f"cannot read {source!r}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise FactorizationError(f"{source!r} is not valid JSON: {exc}") from None
    try:
        return Factorization.from_json(obj)
    except (KeyError, TypeError, ValueError) as exc:
        raise FactorizationError(f"bad factorization in {source!r}: {exc}") from None
