"""Todd-Coxeter coset enumeration (HLT with lookahead) and abelianization.

Words are tuples of signed 1-based generator indices, as for braids.  In
the coset table generator g occupies column 2(g-1) and its inverse the
next column.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field

from .braid import BraidWord
from .hurwitz import Factorization
from .orbit import DEFAULT_MAX_VERTICES, enumerate_orbit, stabilizes

DEFAULT_MAX_COSETS = 10**5
COMPLETE = "complete"
BUDGET_EXCEEDED = "budget-exceeded"


@dataclass
class Presentation:
    ngens: int
    relators: list[tuple[int, ...]]
    names: list[str] = field(default_factory=list)

    def __post_init__(self):
        self.relators = [tuple(r) for r in self.relators]
        if not self.names:
            self.names = [f"s{i}" for i in range(1, self.ngens + 1)]
        for r in self.relators:
            _check_word(r, self.ngens)

    def format_word(self, w) -> str:
        return " ".join(
            self.names[abs(x) - 1] + ("" if x > 0 else "^-1") for x in w
        ) or "1"


def _check_word(w, ngens):
    for x in w:
        if x == 0 or abs(x) > ngens:
            raise ValueError(f"letter {x} out of range for {ngens} generators")


def braid_presentation(n: int) -> Presentation:
    if n < 2:
        raise ValueError("B_n presentation needs n >= 2")
    rels = []
    for i in range(1, n - 1):
        rels.append((i, i + 1, i, -(i + 1), -i, -(i + 1)))
    for i in range(1, n):
        for j in range(i + 2, n):
            rels.append((i, j, -i, -j))
    return Presentation(n - 1, rels)


_SECTION = re.compile(r"^\s*(gens|rel|rels|sub)\s*:(.*)$", re.S)
_POWER = re.compile(r"^([A-Za-z_][\w]*)(?:\^(-?\d+))?$")


def _parse_named_word(text: str, names: list[str]) -> tuple[int, ...]:
    out: list[int] = []
    for tok in text.split():
        m = _POWER.match(tok)
        if not m or m.group(1) not in names:
            raise ValueError(f"cannot parse token {tok!r}")
        g = names.index(m.group(1)) + 1
        e = int(m.group(2)) if m.group(2) is not None else 1
        out.extend([g if e > 0 else -g] * abs(e))
    return tuple(out)


def _parse_relator(text: str, names) -> tuple[int, ...]:
    if "=" in text:
        lhs, rhs = text.split("=", 1)
        r = _parse_named_word(rhs, names)
        return _parse_named_word(lhs, names) + tuple(-x for x in reversed(r))
    return _parse_named_word(text, names)


def parse_presentation(text: str) -> tuple[Presentation, list[tuple[int, ...]]]:
    """Parse ``"gens: a b; rel: a b a = b a b; sub: a^3, b"``.

    Relators and subgroup words are comma-separated; ``lhs = rhs`` is read
    as the relator lhs rhs^-1.
    """
    names: list[str] = []
    rels: list[str] = []
    subs: list[str] = []
    for part in text.split(";"):
        if not part.strip():
            continue
        m = _SECTION.match(part)
        if not m:
            raise ValueError(f"cannot parse section {part!r}")
        tag, body = m.group(1), m.group(2)
        items = [s for s in body.split(",") if s.strip()]
        if tag == "gens":
            names = body.replace(",", " ").split()
        elif tag.startswith("rel"):
            rels.extend(items)
        else:
            subs.extend(items)
    if not names:
        raise ValueError("presentation lists no generators")
    pres = Presentation(len(names), [_parse_relator(r, names) for r in rels], names)
    return pres, [_parse_named_word(s, names) for s in subs]


@dataclass
class CosetTable:
    ngens: int
    rows: list[list[int]]
    status: str

    @property
    def complete(self) -> bool:
        return self.status == COMPLETE

    @property
    def index(self) -> int:
        return len(self.rows)

    def act(self, coset: int, word) -> int | None:
        for x in word:
            coset = self.rows[coset][_col(x)]
            if coset is None:
                return None
        return coset

    def is_closed(self, relators, subgroup) -> bool:
        if any(v is None for row in self.rows for v in row):
            return False
        return all(
            self.act(c, r) == c for c in range(self.index) for r in relators
        ) and all(self.act(0, w) == 0 for w in subgroup)


def _col(x: int) -> int:
    return 2 * (x - 1) if x > 0 else 2 * (-x - 1) + 1


class _Enumerator:
    def __init__(self, ngens, relators, subgroup, max_cosets):
        self.ncols = 2 * ngens
        self.relators = [[_col(x) for x in r] for r in relators if r]
        self.subgroup = [[_col(x) for x in w] for w in subgroup if w]
        self.max_cosets = max_cosets
        self.table = [[None] * self.ncols]
        self.parent = [0]
        self.queue: deque[int] = deque()

    # -- union-find over cosets; parent[c] == c means c is live
    def live(self, c) -> bool:
        return self.parent[c] == c

    def rep(self, c) -> int:
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def define(self, c, x) -> bool:
        if len(self.table) >= self.max_cosets:
            return False
        d = len(self.table)
        self.table.append([None] * self.ncols)
        self.parent.append(d)
        self.table[c][x] = d
        self.table[d][x ^ 1] = c
        return True

    def merge(self, a, b):
        a, b = self.rep(a), self.rep(b)
        if a == b:
            return
        if a > b:
            a, b = b, a
        self.parent[b] = a
        self.queue.append(b)

    def coincidence(self, a, b):
        self.merge(a, b)
        while self.queue:
            g = self.queue.popleft()
            for x in range(self.ncols):
                d = self.table[g][x]
                if d is None:
                    continue
                self.table[d][x ^ 1] = None
                m1, m2 = self.rep(g), self.rep(d)
                if self.table[m1][x] is not None:
                    self.merge(m2, self.table[m1][x])
                elif self.table[m2][x ^ 1] is not None:
                    self.merge(m1, self.table[m2][x ^ 1])
                else:
                    self.table[m1][x] = m2
                    self.table[m2][x ^ 1] = m1

    def scan(self, c, w, fill: bool) -> bool:
        """Scan ``w`` at ``c``; with ``fill`` define cosets to complete it.

        Returns False only when a needed definition hits the budget.
        """
        T = self.table
        f, i = c, 0
        b, j = c, len(w) - 1
        while True:
            while i <= j and T[f][w[i]] is not None:
                f = T[f][w[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return True
            while j >= i and T[b][w[j] ^ 1] is not None:
                b = T[b][w[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return True
            if i == j:
                T[f][w[i]] = b
                T[b][w[i] ^ 1] = f
                return True
            if not fill or not self.define(f, w[i]):
                return not fill

    def lookahead(self):
        for c in range(len(self.table)):
            for r in self.relators:
                if not self.live(c):
                    break
                self.scan(c, r, fill=False)

    def compact(self) -> dict[int, int]:
        order = [c for c in range(len(self.table)) if self.live(c)]
        new = {c: k for k, c in enumerate(order)}
        self.table = [
            [None if v is None else new[v] for v in self.table[c]] for c in order
        ]
        self.parent = list(range(len(order)))
        return new

    def run(self) -> str:
        for w in self.subgroup:
            if not self.scan(0, w, fill=True):
                return BUDGET_EXCEEDED
        c = 0
        while c < len(self.table):
            if self.live(c):
                ok = self._close_coset(c)
                if not ok:
                    self.lookahead()
                    remap = self.compact()
                    if len(self.table) >= self.max_cosets:
                        return BUDGET_EXCEEDED
                    # resume at the first surviving coset at or after c
                    c = min((v for k, v in remap.items() if k >= c), default=len(self.table))
                    continue
            c += 1
        self.compact()
        return COMPLETE

    def _close_coset(self, c) -> bool:
        for r in self.relators:
            if not self.live(c):
                return True
            if not self.scan(c, r, fill=True):
                return False
        for x in range(self.ncols):
            if not self.live(c):
                return True
            if self.table[c][x] is None and not self.define(c, x):
                return False
        return True


def todd_coxeter(p: Presentation, subgroup, max_cosets: int = DEFAULT_MAX_COSETS) -> CosetTable:
    """Enumerate the cosets of <subgroup> in the group presented by ``p``.

    Cosets are numbered in definition order after removal of coincident
    ones; coset 0 is the subgroup itself.
    """
    if max_cosets < 1:
        raise ValueError("max_cosets must be positive")
    subgroup = [tuple(w.letters if isinstance(w, BraidWord) else w) for w in subgroup]
    for w in subgroup:
        _check_word(w, p.ngens)
    e = _Enumerator(p.ngens, p.relators, subgroup, max_cosets)
    status = e.run()
    return CosetTable(p.ngens, e.table, status)


# -- abelianization ---------------------------------------------------------

def smith_normal_form(matrix) -> list[int]:
    """Nonzero invariant factors d_1 | d_2 | ... of an integer matrix.

    Pivots on the entry of least absolute value; exact integer arithmetic.
    """
    A = [list(map(int, row)) for row in matrix]
    m = len(A)
    n = len(A[0]) if A else 0
    diag = []
    for t in range(min(m, n)):
        while True:
            nz = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
            if not nz:
                return diag
            _, pi, pj = min(nz)
            A[t], A[pi] = A[pi], A[t]
            for row in A:
                row[t], row[pj] = row[pj], row[t]
            piv = A[t][t]
            for i in range(t + 1, m):
                q = A[i][t] // piv
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
            for j in range(t + 1, n):
                q = A[t][j] // piv
                if q:
                    for row in A:
                        row[j] -= q * row[t]
            if any(A[i][t] for i in range(t + 1, m)) or any(A[t][j] for j in range(t + 1, n)):
                continue  # a smaller remainder is now the pivot candidate
            bad = next((i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % piv), None)
            if bad is None:
                break
            # fold a row the pivot does not divide into row t
            A[t] = [a + b for a, b in zip(A[t], A[bad])]
        diag.append(abs(A[t][t]))
    return diag


@dataclass(frozen=True)
class Abelianization:
    free_rank: int
    torsion: tuple[int, ...]

    def __str__(self) -> str:
        parts = [f"Z^{self.free_rank}"] if self.free_rank else []
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) or "0"


def relation_matrix(p: Presentation) -> list[list[int]]:
    rows = []
    for r in p.relators:
        row = [0] * p.ngens
        for x in r:
            row[abs(x) - 1] += 1 if x > 0 else -1
        rows.append(row)
    return rows


def abelianization(p: Presentation) -> Abelianization:
    diag = smith_normal_form(relation_matrix(p)) if p.relators else []
    return Abelianization(p.ngens - len(diag), tuple(d for d in diag if d > 1))


def brq3_presentation() -> Presentation:
    """<a, b | (ba)^3 = (ab)^3> with a = s1^3, b = s13."""
    return Presentation(2, [(2, 1) * 3 + (-2, -1) * 3], ["a", "b"])


# -- orbit / coset cross-check ------------------------------------------------

@dataclass
class IndexReport:
    orbit_size: int
    orbit_complete: bool
    coset_count: int
    coset_complete: bool
    stabilizes: list[bool]
    verdict: bool

    def to_json(self) -> dict:
        return {
            "orbit_size": self.orbit_size,
            "orbit_complete": self.orbit_complete,
            "coset_count": self.coset_count,
            "coset_complete": self.coset_complete,
            "stabilizes": self.stabilizes,
            "generates_stabilizer": self.verdict,
        }


def cross_check_index(
    f: Factorization,
    subgroup: list[BraidWord],
    max_vertices: int = DEFAULT_MAX_VERTICES,
    max_cosets: int = DEFAULT_MAX_COSETS,
) -> IndexReport:
    """Do the given braids generate the stabilizer of ``f``?

    True exactly when each braid stabilizes ``f`` and the index of the
    subgroup they generate equals the orbit size: then H <= Stab with
    [B_n : H] = [B_n : Stab] < oo, so H = Stab.
    """
    n = f.n
    for b in subgroup:
        if b.n != n:
            raise ValueError(f"braid on {b.n} strands for a factorization with {n} entries")
    orbit = enumerate_orbit(f, max_vertices)
    table = todd_coxeter(braid_presentation(n), [b.letters for b in subgroup], max_cosets)
    stab = [stabilizes(f, b) for b in subgroup]
    verdict = (
        orbit.complete and table.complete and all(stab) and orbit.size == table.index
    )
    return IndexReport(orbit.size, orbit.complete, table.index, table.complete, stab, verdict)
