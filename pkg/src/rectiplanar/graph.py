"""Undirected multigraph store, parsing, and structural classification."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import GraphFormatError


@dataclass(frozen=True)
class Graph:
    """Multigraph on vertices ``0..n-1``.

    ``edges[i]`` is the endpoint pair of edge ``i``; ``adjacency[v]`` lists the
    ids of edges incident to ``v`` (in edge-id order).
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges) -> Graph:
        edges = tuple((int(u), int(v)) for u, v in edges)
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj: list[list[int]] = [[] for _ in range(n)]
        for i, (u, v) in enumerate(edges):
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {i} ({u}, {v}) has an endpoint out of range")
            if u == v:
                raise ValueError(f"edge {i} is a self-loop at {u}")
            adj[u].append(i)
            adj[v].append(i)
        return cls(n, edges, tuple(tuple(a) for a in adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def other(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if a == v else a

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def to_text(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines.extend(f"{u} {v}" for u, v in self.edges)
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "edges": [list(e) for e in self.edges]})


@dataclass(frozen=True)
class GraphClass:
    is_degree4: bool
    is_biconnected: bool
    is_simple_cycle: bool
    is_sp: bool
    is_independent_parallel: bool


def parse_graph(text: bytes | str) -> Graph:
    """Parse the edge-list text format or the JSON format.

    Errors carry the 1-based line number of the offending line.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _parse_json(stripped)
    return _parse_text(text)


def _parse_json(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise GraphFormatError('JSON graph needs keys "n" and "edges"', 1)
    n = data["n"]
    if not isinstance(n, int) or n < 0:
        raise GraphFormatError('"n" must be a non-negative integer', 1)
    edges = []
    for i, e in enumerate(data["edges"]):
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise GraphFormatError(f"edge {i} is not a pair of integers", 1)
        edges.append(tuple(e))
    return _checked(n, edges, [1] * len(edges))


def _parse_text(text: str) -> Graph:
    rows = [(no, line.split()) for no, line in enumerate(text.splitlines(), 1)]
    rows = [(no, tok) for no, tok in rows if tok]
    if not rows:
        raise GraphFormatError("empty input", 1)
    no, header = rows[0]
    if len(header) != 2 or not all(_is_int(t) for t in header):
        raise GraphFormatError('header must be "n m"', no)
    n, m = int(header[0]), int(header[1])
    if n < 0 or m < 0:
        raise GraphFormatError("negative count in header", no)
    body = rows[1:]
    if len(body) != m:
        last = body[-1][0] if body else no
        raise GraphFormatError(f"expected {m} edge lines, found {len(body)}", last)
    edges, lines = [], []
    for no, tok in body:
        if len(tok) != 2 or not all(_is_int(t) for t in tok):
            raise GraphFormatError('edge line must be "u v"', no)
        edges.append((int(tok[0]), int(tok[1])))
        lines.append(no)
    return _checked(n, edges, lines)


def _checked(n: int, edges, lines) -> Graph:
    for (u, v), no in zip(edges, lines):
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex index out of range in edge ({u}, {v})", no)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", no)
    return Graph.from_edges(n, edges)


def _is_int(tok: str) -> bool:
    try:
        int(tok)
    except ValueError:
        return False
    return True


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = [False] * g.n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        v = stack.pop()
        for e in g.adjacency[v]:
            w = g.other(e, v)
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == g.n


def is_biconnected(g: Graph) -> bool:
    """Connected, at least one cycle through every vertex, no articulation point.

    A single edge (or a lone vertex) is not considered biconnected here; the
    tester needs every vertex to lie on a cycle.
    """
    if g.n < 2 or any(len(a) < 2 for a in g.adjacency):
        return False
    disc = [-1] * g.n
    low = [0] * g.n
    disc[0] = low[0] = 0
    timer = 1
    root_children = 0
    # frames: (vertex, edge used to enter, next adjacency index)
    stack = [(0, -1, 0)]
    while stack:
        v, via, i = stack[-1]
        adj = g.adjacency[v]
        if i < len(adj):
            stack[-1] = (v, via, i + 1)
            e = adj[i]
            if e == via:
                continue
            w = g.other(e, v)
            if disc[w] == -1:
                disc[w] = low[w] = timer
                timer += 1
                if v == 0:
                    root_children += 1
                stack.append((w, e, 0))
            elif disc[w] < low[v]:
                low[v] = disc[w]
        else:
            stack.pop()
            if stack:
                p = stack[-1][0]
                if low[v] < low[p]:
                    low[p] = low[v]
                if p != 0 and low[v] >= disc[p]:
                    return False
    return timer == g.n and root_children == 1


def is_simple_cycle(g: Graph) -> bool:
    return g.n >= 2 and all(len(a) == 2 for a in g.adjacency) and is_connected(g)


def classify(g: Graph) -> GraphClass:
    from .errors import NotSeriesParallel
    from .spq import build_spq_tree

    deg4 = g.max_degree() <= 4
    bicon = is_biconnected(g)
    cycle = is_simple_cycle(g)
    if cycle:
        return GraphClass(deg4, bicon, True, True, True)
    if not bicon:
        return GraphClass(deg4, False, False, False, False)
    try:
        tree = build_spq_tree(g)
    except NotSeriesParallel:
        return GraphClass(deg4, True, False, False, False)
    return GraphClass(deg4, True, False, True, tree.is_independent_parallel())
