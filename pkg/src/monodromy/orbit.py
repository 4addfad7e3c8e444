"""Breadth-first enumeration of Hurwitz orbits."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import NamedTuple

from .braid import BraidWord, pure_braid_generators
from .canonical import key
from .hurwitz import Factorization, apply_braid, apply_letters, hurwitz_move

DEFAULT_MAX_VERTICES = 10**6
THREADS_ENV = "MONODROMY_THREADS"


class IncompleteOrbit(RuntimeError):
    pass


@dataclass
class OrbitGraph:
    n: int
    base: str
    keys: list[bytes]
    reps: list[Factorization]
    edges: dict[tuple[int, int, int], int]
    root: int
    complete: bool
    index: dict[bytes, int] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not self.index:
            self.index = {k: v for v, k in enumerate(self.keys)}

    @property
    def size(self) -> int:
        return len(self.keys)

    def out_degrees(self, v: int) -> tuple[int, int]:
        fwd = sum((v, i, 1) in self.edges for i in range(1, self.n))
        inv = sum((v, i, -1) in self.edges for i in range(1, self.n))
        return fwd, inv

    def check_degrees(self) -> bool:
        """Every vertex has n-1 forward and n-1 inverse edges, and they pair up."""
        for v in range(self.size):
            if self.out_degrees(v) != (self.n - 1, self.n - 1):
                return False
        return all(self.edges.get((w, i, -s)) == v for (v, i, s), w in self.edges.items())

    def summary(self) -> dict:
        out = {"size": self.size, "complete": self.complete}
        if self.complete:
            out["fixed"] = fixed_point_stats(self)
        return out


def _children(rep: Factorization, n: int):
    out = []
    for i in range(1, n):
        for s in (1, -1):
            g = hurwitz_move(rep, i, s)
            out.append((i, s, key(g), g))
    return out


def _expand_chunk(reps):
    return [_children(r, r.n) for r in reps]


def resolve_workers(workers: int | None) -> int:
    if workers is None:
        workers = int(os.environ.get(THREADS_ENV, "1") or 1)
    return max(1, workers)


def enumerate_orbit(
    f: Factorization, max_vertices: int = DEFAULT_MAX_VERTICES, workers: int | None = None
) -> OrbitGraph:
    """Close the Hurwitz orbit of ``f`` under s_1^{+-1} ... s_{n-1}^{+-1}.

    Stops adding vertices once ``max_vertices`` are known; the graph is then
    returned with ``complete=False``.  Vertex 0 is the input; the remaining
    ids follow the sorted canonical keys, so the result does not depend on
    traversal order or on ``workers``.
    """
    n = f.n
    if n < 2:
        raise ValueError("orbit enumeration needs at least two entries")
    if max_vertices < 1:
        raise ValueError("max_vertices must be positive")
    workers = resolve_workers(workers)

    keys = [key(f)]
    reps = [f]
    index = {keys[0]: 0}
    edges: dict[tuple[int, int, int], int] = {}
    frontier = [0]
    truncated = False
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        while frontier:
            if pool is not None and len(frontier) >= 4 * workers:
                step = -(-len(frontier) // (4 * workers))
                chunks = [frontier[k:k + step] for k in range(0, len(frontier), step)]
                results = []
                for part in pool.map(_expand_chunk, [[reps[v] for v in c] for c in chunks]):
                    results.extend(part)
            else:
                results = [_children(reps[v], n) for v in frontier]
            nxt = []
            for v, children in zip(frontier, results):
                for i, s, k, g in children:
                    w = index.get(k)
                    if w is None:
                        if len(keys) >= max_vertices:
                            truncated = True
                            continue
                        w = len(keys)
                        index[k] = w
                        keys.append(k)
                        reps.append(g)
                        nxt.append(w)
                    edges[(v, i, s)] = w
            frontier = nxt
    finally:
        if pool is not None:
            pool.shutdown()

    graph = _relabel(n, f.base, keys, reps, edges, complete=not truncated)
    if graph.complete and not graph.check_degrees():
        raise AssertionError("closed orbit violates the degree criterion")
    return graph


def _relabel(n, base, keys, reps, edges, complete) -> OrbitGraph:
    order = [0] + sorted(range(1, len(keys)), key=keys.__getitem__)
    new_id = {old: new for new, old in enumerate(order)}
    return OrbitGraph(
        n=n,
        base=base,
        keys=[keys[o] for o in order],
        reps=[reps[o] for o in order],
        edges={(new_id[v], i, s): new_id[w] for (v, i, s), w in sorted(edges.items())},
        root=0,
        complete=complete,
    )


def stabilizes(f: Factorization, b: BraidWord) -> bool:
    return key(apply_braid(f, b)) == key(f)


class OrbitSize(NamedTuple):
    size: int
    complete: bool


def orbit_under(f: Factorization, words, max_vertices: int = DEFAULT_MAX_VERTICES) -> OrbitSize:
    """Orbit of ``f`` under the group generated by the given letter tuples."""
    moves = [tuple(w) for w in words]
    moves += [tuple(-x for x in reversed(w)) for w in moves]
    seen = {key(f)}
    frontier = [f]
    while frontier:
        nxt = []
        for g in frontier:
            for w in moves:
                h = apply_letters(g, w)
                k = key(h)
                if k in seen:
                    continue
                if len(seen) >= max_vertices:
                    return OrbitSize(len(seen), False)
                seen.add(k)
                nxt.append(h)
        frontier = nxt
    return OrbitSize(len(seen), True)


def pure_orbit_size(f: Factorization, max_vertices: int = DEFAULT_MAX_VERTICES) -> OrbitSize:
    if f.n < 2:
        raise ValueError("orbit enumeration needs at least two entries")
    return orbit_under(f, [b.letters for b in pure_braid_generators(f.n)], max_vertices)


def fixed_point_stats(g: OrbitGraph) -> dict[str, int]:
    if not g.complete:
        raise IncompleteOrbit("fixed-point counts need a complete orbit")
    return {
        f"s{i}": sum(g.edges[(v, i, 1)] == v for v in range(g.size)) for i in range(1, g.n)
    }


def export_dot(g: OrbitGraph) -> str:
    lines = ["digraph hurwitz_orbit {"]
    if not g.complete:
        lines.append("  // incomplete: vertex budget exhausted")
    for v in range(g.size):
        lines.append(f'  {v} [label="{v}"];')
    for (v, i, s), w in sorted(g.edges.items()):
        if s == 1 and v != w:
            lines.append(f'  {v} -> {w} [label="s{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
