"""Deterministic instance generators."""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph

MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64: a tiny fully specified 64-bit PRNG.

    Used instead of :mod:`random` so generated instances are identical across
    Python versions and easy to reproduce in other languages.
    """

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, k: int) -> int:
        """Uniform-ish integer in ``[0, k)`` (modulo bias is below 2^-50 for small k)."""
        return self.next() % k

    def chance(self, num: int, den: int) -> bool:
        return self.below(den) < num


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def gen_chain(length: int) -> Graph:
    """Path with ``length`` edges from vertex 0 to vertex ``length``."""
    if length < 1:
        raise ValueError("chain length must be positive")
    return Graph.from_edges(length + 1, [(i, i + 1) for i in range(length)])


@dataclass
class LowerBound:
    graph: Graph
    g0_components: list[list[int]] = field(default_factory=list)

    def sidecar(self) -> dict:
        return {"g0_components": self.g0_components}


def gen_lowerbound(N: int) -> LowerBound:
    """The family whose rectilinear drawings force a G_0 chain to spiral by N+2.

    G_0 is a chain of N+4 vertices; G_1 is three copies of G_0 in parallel;
    G_k puts three series (edge, G_{k-1}, edge) in parallel; the final graph is
    a cycle of two 2-edge chains and two copies of G_L, with L = N/2 + 1.
    """
    if N < 2 or N % 2:
        raise ValueError("N must be an even integer >= 2")
    L = N // 2 + 1
    edges: list[tuple[int, int]] = []
    g0s: list[list[int]] = []
    counter = [0]

    def vertex() -> int:
        counter[0] += 1
        return counter[0] - 1

    def g0(a: int, b: int) -> None:
        chain = [a] + [vertex() for _ in range(N + 2)] + [b]
        edges.extend(zip(chain, chain[1:]))
        g0s.append(chain)

    def build(k: int, a: int, b: int) -> None:
        # iterative over levels would obscure the shape; depth is only L
        if k == 1:
            for _ in range(3):
                g0(a, b)
            return
        for _ in range(3):
            x, y = vertex(), vertex()
            edges.append((a, x))
            build(k - 1, x, y)
            edges.append((y, b))

    s1, s2, t1, t2 = vertex(), vertex(), vertex(), vertex()
    build(L, s1, s2)
    build(L, t1, t2)
    m1, m2 = vertex(), vertex()
    edges.extend([(s2, m1), (m1, t1), (t2, m2), (m2, s1)])
    return LowerBound(Graph.from_edges(counter[0], edges), g0s)


class _DisjointSet:
    def __init__(self):
        self.parent: list[int] = []

    def make(self) -> int:
        self.parent.append(len(self.parent))
        return len(self.parent) - 1

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        self.parent[self.find(b)] = self.find(a)


def gen_random_ipsp(n_target: int, seed: int) -> Graph:
    """Random biconnected independent-parallel SP-graph with degree <= 4.

    Pieces are two-terminal graphs whose poles have degree 1. They are joined
    in series, or two or three of them are put in parallel and the result gets
    a new edge on each side, so no vertex is a pole of two parallel bundles.
    The final piece is closed by a parallel of 2-3 pieces or by one extra edge.
    Attempts repeat (continuing the same stream) until the vertex count lies in
    ``[n_target, 2 * n_target]``.
    """
    if n_target < 4:
        raise ValueError("n_target must be at least 4")
    rng = SplitMix64(seed)
    while True:
        g = _attempt(n_target, rng)
        if g is not None:
            return g


def _attempt(n_target: int, rng: SplitMix64) -> Graph | None:
    ds = _DisjointSet()
    edges: list[tuple[int, int]] = []
    pool: list[tuple[int, int]] = []
    count = 0

    def chain(length: int) -> tuple[int, int]:
        nonlocal count
        vs = [ds.make() for _ in range(length + 1)]
        edges.extend(zip(vs, vs[1:]))
        count += length + 1
        return vs[0], vs[-1]

    def take() -> tuple[int, int]:
        i = rng.below(len(pool))
        pool[i], pool[-1] = pool[-1], pool[i]
        return pool.pop()

    def parallel(k: int) -> tuple[int, int]:
        nonlocal count
        parts = [take() for _ in range(k)]
        a, b = parts[0]
        for x, y in parts[1:]:
            ds.union(a, x)
            ds.union(b, y)
        count -= 2 * (k - 1)
        return a, b

    pool.append(chain(1 + rng.below(3)))
    while count < n_target or len(pool) > 3:
        grow = count < n_target and (len(pool) < 2 or rng.chance(2, 5))
        if grow:
            pool.append(chain(1 + rng.below(3)))
            continue
        if len(pool) < 2:
            continue
        if rng.chance(1, 2):
            (a, b), (c, d) = take(), take()
            ds.union(b, c)
            count -= 1
            pool.append((a, d))
        else:
            k = 3 if len(pool) >= 3 and rng.chance(1, 2) else 2
            a, b = parallel(k)
            x, y = ds.make(), ds.make()
            edges.extend([(x, a), (b, y)])
            count += 2
            pool.append((x, y))
    if len(pool) >= 2 and rng.chance(2, 3):
        parallel(len(pool))
    else:
        while len(pool) > 1:
            (a, b), (c, d) = take(), take()
            ds.union(b, c)
            count -= 1
            pool.append((a, d))
        a, b = pool[0]
        edges.append((a, b))
    if not (n_target <= count <= 2 * n_target):
        return None
    roots: dict[int, int] = {}
    for v in range(len(ds.parent)):
        r = ds.find(v)
        if r not in roots:
            roots[r] = len(roots)
    perm = list(range(len(roots)))
    for i in range(len(perm) - 1, 0, -1):
        j = rng.below(i + 1)
        perm[i], perm[j] = perm[j], perm[i]
    label = {r: perm[i] for r, i in roots.items()}
    out = [(label[ds.find(a)], label[ds.find(b)]) for a, b in edges]
    return Graph.from_edges(len(roots), out)
