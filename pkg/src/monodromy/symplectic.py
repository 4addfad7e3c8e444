"""Homology action of Dehn twists on a genus-g surface.

H_1 has basis x_1, y_1, ..., x_g, y_g with <x_i, y_i> = 1, i.e. the form
is block-diagonal in [[0, 1], [-1, 0]].  A twist acts as the transvection
w -> w + s<w, v>v where s = +1 is the convention matching the genus-one
twist matrices in :mod:`monodromy.sl2`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hurwitz import hyperelliptic_word

RELATIONS = ("eta1", "eta2", "eta3")


def identity(m: int) -> list[list[int]]:
    return [[int(i == j) for j in range(m)] for i in range(m)]


def form_matrix(g: int) -> list[list[int]]:
    J = [[0] * (2 * g) for _ in range(2 * g)]
    for i in range(g):
        J[2 * i][2 * i + 1] = 1
        J[2 * i + 1][2 * i] = -1
    return J


def pairing(v, w) -> int:
    return sum(v[2 * i] * w[2 * i + 1] - v[2 * i + 1] * w[2 * i] for i in range(len(v) // 2))


def matmul(A, B):
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def transpose(A):
    return [list(r) for r in zip(*A)]


@dataclass(frozen=True)
class SpMatrix:
    genus: int
    rows: tuple[tuple[int, ...], ...]

    def __matmul__(self, other: "SpMatrix") -> "SpMatrix":
        return SpMatrix(self.genus, tuple(map(tuple, matmul(self.rows, other.rows))))

    def apply(self, v) -> list[int]:
        return [sum(a * b for a, b in zip(row, v)) for row in self.rows]

    def is_symplectic(self) -> bool:
        J = form_matrix(self.genus)
        return matmul(matmul(transpose(self.rows), J), self.rows) == J

    def is_identity(self) -> bool:
        return [list(r) for r in self.rows] == identity(2 * self.genus)


@dataclass(frozen=True)
class ChainClass:
    index: int
    vector: tuple[int, ...]


def chain_classes(g: int) -> list[ChainClass]:
    """[c_1] = x_1, [c_2i] = y_i, [c_2i+1] = x_i + x_{i+1} (x_{g+1} = 0)."""
    if g < 1:
        raise ValueError("genus must be >= 1")

    def x(i):
        v = [0] * (2 * g)
        if i <= g:
            v[2 * (i - 1)] = 1
        return v

    def y(i):
        v = [0] * (2 * g)
        v[2 * (i - 1) + 1] = 1
        return v

    out = [ChainClass(1, tuple(x(1)))]
    for i in range(1, g + 1):
        out.append(ChainClass(2 * i, tuple(y(i))))
        out.append(ChainClass(2 * i + 1, tuple(a + b for a, b in zip(x(i), x(i + 1)))))
    return out


def transvection(v, g: int, sign: int = 1) -> SpMatrix:
    v = list(v)
    if len(v) != 2 * g:
        raise ValueError(f"vector of length {len(v)} is not in H_1 of genus {g}")
    if not any(v):
        raise ValueError("transvection about the zero vector")
    # column j is e_j + s<e_j, v> v
    cols = []
    for j in range(2 * g):
        e = [int(k == j) for k in range(2 * g)]
        c = sign * pairing(e, v)
        cols.append([e[k] + c * v[k] for k in range(2 * g)])
    return SpMatrix(g, tuple(map(tuple, transpose(cols))))


def relation_product(kind: str, g: int, sign: int = 1) -> SpMatrix:
    classes = chain_classes(g)
    twists = [transvection(c.vector, g, sign) for c in classes]
    out = SpMatrix(g, tuple(map(tuple, identity(2 * g))))
    for idx in hyperelliptic_word(kind, g):
        out = out @ twists[idx - 1]
    return out


def verify_relation(kind: str, g: int, sign: int = 1) -> bool:
    return relation_product(kind, g, sign).is_identity()


def convention_report(genera=(1, 2, 3, 4)) -> dict[int, bool]:
    """For each sign convention, whether every relation holds at every genus."""
    return {
        s: all(verify_relation(k, g, s) for k in RELATIONS for g in genera)
        for s in (1, -1)
    }
