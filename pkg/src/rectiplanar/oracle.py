"""Exhaustive ground truth for small graphs.

Every rotation system is enumerated. For a planar one, corner angles are
found by a small transportation problem: each vertex ``v`` hands out
``4 - deg(v)`` extra quarter turns to its corners, and a face of length
``L`` needs ``L - 4`` extra quarter turns (``L + 4`` for the outer face).
Nothing here uses the spirality algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

from .errors import CapExceeded
from .graph import Graph

DEFAULT_EDGE_CAP = 14
DEFAULT_COMPONENT_CAP = 16


@dataclass
class OracleResult:
    feasible: bool
    embeddings_tried: int

    def to_dict(self) -> dict:
        return {"feasible": self.feasible, "embeddings_tried": self.embeddings_tried}


def _cyclic_orders(darts: tuple[int, ...], canonical: bool):
    """All cyclic orders of ``darts``; with ``canonical`` only one per mirror pair."""
    if len(darts) <= 2:
        yield darts
        return
    first, rest = darts[0], darts[1:]
    for perm in permutations(rest):
        if canonical and perm > perm[::-1]:
            continue
        yield (first,) + perm


def rotation_systems(g: Graph):
    """Yield ``rot[v]`` = cyclic tuple of incident edge ids, one per mirror class."""
    pivot = next((v for v in range(g.n) if g.degree(v) >= 3), None)
    choices = [list(_cyclic_orders(g.adjacency[v], v == pivot)) for v in range(g.n)]
    for combo in product(*choices):
        yield combo


def _face_darts(g: Graph, rot) -> list[list[int]]:
    succ: dict[tuple[int, int], int] = {}
    for v, order in enumerate(rot):
        k = len(order)
        for i, e in enumerate(order):
            succ[(v, e)] = order[(i + 1) % k]
    seen = [False] * (2 * g.m)
    faces = []
    for start in range(2 * g.m):
        if seen[start]:
            continue
        face = []
        d = start
        while not seen[d]:
            seen[d] = True
            face.append(d)
            e, back = divmod(d, 2)
            head = g.edges[e][0] if back else g.edges[e][1]
            f = succ[(head, e)]
            d = 2 * f + (0 if g.edges[f][0] == head else 1)
        faces.append(face)
    return faces


def _dart_head(g: Graph, d: int) -> int:
    e, back = divmod(d, 2)
    return g.edges[e][0] if back else g.edges[e][1]


def transport_feasible(supply: dict, demand: dict, arcs: dict) -> bool:
    """Can every supply be routed to exactly meet every demand along ``arcs``?

    ``arcs[s]`` is the set of sinks reachable from source ``s``; arc
    capacities are unbounded.
    """
    if any(x < 0 for x in supply.values()) or any(x < 0 for x in demand.values()):
        return False
    if sum(supply.values()) != sum(demand.values()):
        return False
    left = dict(demand)
    # flow[s][t] carried on each arc, for residual back-edges
    flow: dict = {s: {} for s in supply}
    into: dict = {t: {} for t in demand}
    for s, amount in supply.items():
        for _ in range(amount):
            if not _augment(s, arcs, left, flow, into):
                return False
    return True


def _augment(src, arcs, left, flow, into) -> bool:
    # BFS over sources; from a source we may go to any sink; from a sink we may
    # go back to any source that currently sends it flow
    prev = {("s", src): None}
    queue = [("s", src)]
    for node in queue:
        kind, x = node
        if kind == "s":
            for t in arcs.get(x, ()):
                nxt = ("t", t)
                if nxt in prev:
                    continue
                prev[nxt] = node
                if left[t] > 0:
                    _apply(nxt, prev, left, flow, into)
                    return True
                queue.append(nxt)
        else:
            for s, f in into[x].items():
                nxt = ("s", s)
                if f > 0 and nxt not in prev:
                    prev[nxt] = node
                    queue.append(nxt)
    return False


def _apply(end, prev, left, flow, into) -> None:
    left[end[1]] -= 1
    node = end
    while prev[node] is not None:
        p = prev[node]
        if p[0] == "s":  # forward arc source -> sink
            s, t = p[1], node[1]
            flow[s][t] = flow[s].get(t, 0) + 1
            into[t][s] = into[t].get(s, 0) + 1
        else:  # cancel flow sink <- source
            t, s = p[1], node[1]
            flow[s][t] -= 1
            into[t][s] -= 1
        node = p


def _faces_planar(g: Graph, faces) -> bool:
    return len(faces) == g.m - g.n + 2


def _angle_problem(g: Graph, faces, exclude=()):
    """Supplies and vertex->face arcs for a given face list (faces as dart lists)."""
    supply = {v: 4 - g.degree(v) for v in range(g.n) if v not in exclude}
    arcs: dict[int, set[int]] = {v: set() for v in supply}
    corners = []
    for fi, face in enumerate(faces):
        cs = [_dart_head(g, d) for d in face]
        corners.append(cs)
        for w in cs:
            if w in arcs:
                arcs[w].add(fi)
    return supply, arcs, corners


def oracle_test(g: Graph, cap: int = DEFAULT_EDGE_CAP) -> OracleResult:
    """Brute-force rectilinear planarity (no bends) of a connected graph."""
    if g.m > cap:
        raise CapExceeded(f"{g.m} edges exceeds the oracle cap of {cap}")
    if g.max_degree() > 4:
        return OracleResult(False, 0)
    tried = 0
    for rot in rotation_systems(g):
        tried += 1
        faces = _face_darts(g, rot)
        if not _faces_planar(g, faces):
            continue
        supply, arcs, corners = _angle_problem(g, faces)
        for outer in range(len(faces)):
            demand = {
                fi: len(cs) + 4 if fi == outer else len(cs) - 4
                for fi, cs in enumerate(corners)
            }
            if transport_feasible(supply, demand, arcs):
                return OracleResult(True, tried)
    return OracleResult(False, tried)


def oracle_spirality_set(
    comp: Graph, u: int, v: int, cap: int = DEFAULT_COMPONENT_CAP
) -> set[int]:
    """All spiralities of bend-free representations of ``comp`` between poles ``u`` and ``v``.

    A pole of degree above one gets a stub (its alias); the aliases are joined
    by an extra edge so both stubs sit on the external face. The corners at the
    aliases are unconstrained. Returned symmetric: ``x`` in result iff ``-x`` is.
    """
    n = comp.n
    edges = list(comp.edges)
    ua, va = u, v
    if comp.degree(u) > 1:
        ua = n
        n += 1
        edges.append((u, ua))
    if comp.degree(v) > 1:
        va = n
        n += 1
        edges.append((v, va))
    closing = len(edges)
    edges.append((va, ua))
    h = Graph.from_edges(n, edges)
    if h.m > cap:
        raise CapExceeded(f"{h.m} edges exceeds the oracle cap of {cap}")
    if any(h.degree(w) > 4 for w in range(h.n) if w not in (ua, va)):
        return set()
    found: set[int] = set()
    for rot in rotation_systems(h):
        faces = _face_darts(h, rot)
        if not _faces_planar(h, faces):
            continue
        sides = [fi for fi, face in enumerate(faces) if 2 * closing in face or 2 * closing + 1 in face]
        if len(sides) != 2:
            continue
        inner, outer = sides
        supply, arcs, corners = _angle_problem(h, faces, exclude=(ua, va))
        c_in = sum(1 for w in corners[inner] if w not in (ua, va))
        c_out = sum(1 for w in corners[outer] if w not in (ua, va))
        base = {fi: len(cs) - 4 for fi, cs in enumerate(corners)}
        for sigma in range(-c_out, c_in + 1):
            if sigma in found:
                continue
            demand = dict(base)
            demand[inner] = c_in - sigma
            demand[outer] = c_out + sigma
            if transport_feasible(supply, demand, arcs):
                found.add(sigma)
    return found | {-x for x in found}


def component_graph(g: Graph, edge_ids) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on ``edge_ids`` with compact labels; returns it and the label map."""
    label: dict[int, int] = {}
    edges = []
    for e in sorted(edge_ids):
        a, b = g.edges[e]
        for w in (a, b):
            if w not in label:
                label[w] = len(label)
        edges.append((label[a], label[b]))
    return Graph.from_edges(len(label), edges), label
