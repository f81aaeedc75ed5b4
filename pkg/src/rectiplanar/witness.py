"""Witness drawings: spirality targets, orthogonal representation, grid layout.

Directions are integers mod 4 with 0 = east, 1 = north, 2 = west, 3 = south,
so a right turn subtracts one. A dart ``2e`` runs from ``edges[e][0]`` to
``edges[e][1]``; dart ``2e + 1`` runs back.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field

from .errors import InternalInfeasible
from .graph import Graph, is_simple_cycle
from .spirality import (
    SpiralitySet,
    p2_config,
    p3_config,
    root_pair,
    s_node_set,
    s_summary_add,
    SNodeSummary,
)
from .spq import P, Q, S, RootedView

TURN = {3: 1, 0: 0, 1: -1, 2: -2}  # (next - arrival) mod 4 -> right-minus-left turn


# ---------------------------------------------------------------------------
# spirality assignment
# ---------------------------------------------------------------------------


@dataclass
class PLayout:
    order: tuple[int, ...]  # children from left to right
    alphas: tuple[int, int, int, int] | None  # (u_left, u_right, v_left, v_right); None for three children


@dataclass
class SpiralityAssignment:
    view: RootedView
    target: dict[int, int]
    root_k: int
    layout: dict[int, PLayout] = field(default_factory=dict)

    @property
    def root_sigma(self) -> int:
        return self.target[self.view.root_child]


def split_series(sets: list[SpiralitySet], total: int) -> list[int]:
    """Pick one value from each (symmetric) set so the values sum to ``total``.

    Suffix sums are summarized right to left; each child then takes a value
    near the remaining amount that leaves the rest of the suffix feasible.
    """
    k = len(sets)
    suffix: list[SpiralitySet | None] = [None] * (k + 1)
    acc = SNodeSummary()
    for i in range(k - 1, -1, -1):
        acc = s_summary_add(acc, sets[i])
        suffix[i] = s_node_set(acc)
    if not suffix[0].contains(total):
        raise InternalInfeasible(f"series target {total} outside {suffix[0]}")
    out = []
    rest = total
    for i, s in enumerate(sets):
        if i == k - 1:
            if not s.contains(rest):
                raise InternalInfeasible(f"last series child cannot take {rest}")
            out.append(rest)
            break
        nxt = suffix[i + 1]
        x = _pick(s, nxt, rest)
        out.append(x)
        rest -= x
    return out


def _pick(s: SpiralitySet, nxt: SpiralitySet, rest: int) -> int:
    near = max(-s.hi, min(s.hi, rest))
    far = rest - max(-nxt.hi, min(nxt.hi, rest))
    seen = set()
    for base in (near, far, 0):
        for delta in (0, -1, 1, -2, 2, -3, 3):
            x = base + delta
            if x in seen:
                continue
            seen.add(x)
            if s.contains(x) and nxt.contains(rest - x):
                return x
    for x in s.symmetric_values():
        if nxt.contains(rest - x):
            return x
    raise InternalInfeasible(f"no split of {rest} between {s} and {nxt}")


def assign_spiralities(view: RootedView, sets: dict[int, SpiralitySet]) -> SpiralityAssignment:
    """Top-down choice of a spirality for every non-root node."""
    nodes = view.tree.nodes
    rho, rc = view.root, view.root_child
    pair = root_pair(sets[rc], nodes[rho].length)
    if pair is None:
        raise InternalInfeasible(f"root {rho} is not feasible for {sets[rc]}")
    sigma, k = pair
    target = {rc: sigma}
    layout: dict[int, PLayout] = {}
    stack = [rc]
    while stack:
        x = stack.pop()
        nd = nodes[x]
        s = target[x]
        if not sets[x].contains(s):
            raise InternalInfeasible(f"target {s} of node {x} not in {sets[x]}")
        kids = view.children[x]
        if nd.kind == Q:
            if abs(s) > nd.length - 1:
                raise InternalInfeasible(f"chain {x} of length {nd.length} cannot turn {s} times")
            continue
        if nd.kind == P:
            ks = [sets[c] for c in kids]
            if len(kids) == 3:
                cfg = p3_config(*ks, s)
                if cfg is None:
                    raise InternalInfeasible(f"P-node {x} cannot realize {s}")
                order, values = cfg
                layout[x] = PLayout(tuple(kids[i] for i in order), None)
            else:
                cfg = p2_config(*ks, s)
                if cfg is None:
                    raise InternalInfeasible(f"P-node {x} cannot realize {s}")
                order, alphas, values = cfg
                layout[x] = PLayout(tuple(kids[i] for i in order), alphas)
            for c, t in zip(layout[x].order, values):
                target[c] = t
        else:
            for c, t in zip(kids, split_series([sets[c] for c in kids], s)):
                target[c] = t
        stack.extend(kids)
    return SpiralityAssignment(view, target, k, layout)


# ---------------------------------------------------------------------------
# orthogonal representation
# ---------------------------------------------------------------------------


@dataclass
class OrthoRep:
    """Bend-free orthogonal representation.

    ``rot[v]`` lists the darts leaving ``v`` counterclockwise; ``angles[v][i]``
    is the angle in degrees from ``rot[v][i]`` to the next dart. ``outer`` is
    a dart whose right-hand face is the external face; ``anchor`` is the dart
    drawn pointing east.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    rot: list[list[int]]
    angles: list[list[int]]
    outer: int
    anchor: int = 0


def _tail(edges, d: int) -> int:
    return edges[d >> 1][d & 1]


def _head(edges, d: int) -> int:
    return edges[d >> 1][1 - (d & 1)]


def rep_from_directions(n: int, edges, dirs: list[int], anchor: int = 0) -> OrthoRep:
    """Representation induced by per-edge directions (``dirs[e]`` from ``edges[e][0]``)."""
    edges = tuple(tuple(e) for e in edges)
    leaving: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for e, (a, b) in enumerate(edges):
        leaving[a].append((dirs[e] % 4, 2 * e))
        leaving[b].append(((dirs[e] + 2) % 4, 2 * e + 1))
    rot, angles = [], []
    for v in range(n):
        ds = sorted(leaving[v])
        if len({d for d, _ in ds}) != len(ds):
            raise InternalInfeasible(f"two edges leave vertex {v} in the same direction")
        rot.append([d for _, d in ds])
        k = len(ds)
        angles.append([((ds[(i + 1) % k][0] - ds[i][0]) % 4 or 4) * 90 for i in range(k)])
    rep = OrthoRep(n, edges, rot, angles, outer=-1, anchor=anchor)
    outer = [f for f, turn in zip(*_faces(rep)) if turn == -4]
    if len(outer) != 1:
        raise InternalInfeasible("representation does not have exactly one external face")
    rep.outer = outer[0][0]
    return rep


def _faces(rep: OrthoRep) -> tuple[list[list[int]], list[int]]:
    """Faces (dart lists, face on the right) and their turn sums."""
    pos = {}
    for v, darts in enumerate(rep.rot):
        for i, d in enumerate(darts):
            pos[d] = (v, i)
    seen = set()
    faces, turns = [], []
    for start in range(2 * len(rep.edges)):
        if start in seen:
            continue
        face, total = [], 0
        d = start
        while d not in seen:
            seen.add(d)
            face.append(d)
            v, i = pos[d ^ 1]
            total += 2 - rep.angles[v][i] // 90
            d = rep.rot[v][(i + 1) % len(rep.rot[v])]
        faces.append(face)
        turns.append(total)
    return faces, turns


def verify_ortho(rep: OrthoRep) -> bool:
    """Vertex angle sums, face turn sums and the face count of a plane graph."""
    m = len(rep.edges)
    if len(rep.rot) != rep.n or len(rep.angles) != rep.n:
        return False
    deg = [0] * rep.n
    for a, b in rep.edges:
        deg[a] += 1
        deg[b] += 1
    darts_seen = set()
    for v in range(rep.n):
        if len(rep.rot[v]) != deg[v] or len(rep.angles[v]) != deg[v]:
            return False
        if deg[v] and sum(rep.angles[v]) != 360:
            return False
        if any(a not in (90, 180, 270, 360) for a in rep.angles[v]):
            return False
        for d in rep.rot[v]:
            if not (0 <= d < 2 * m) or _tail(rep.edges, d) != v or d in darts_seen:
                return False
            darts_seen.add(d)
    if len(darts_seen) != 2 * m:
        return False
    faces, turns = _faces(rep)
    if len(faces) != m - rep.n + 2:
        return False
    for face, t in zip(faces, turns):
        if t != (-4 if rep.outer in face else 4):
            return False
    return True


def dart_directions(rep: OrthoRep) -> list[int]:
    """Direction of every dart, with ``rep.anchor`` pointing east."""
    dirs = [-1] * (2 * len(rep.edges))
    if not rep.edges:
        return dirs
    pos = {}
    for v, darts in enumerate(rep.rot):
        for i, d in enumerate(darts):
            pos[d] = (v, i)
    dirs[rep.anchor] = 0
    queue = deque([rep.anchor])
    while queue:
        d = queue.popleft()
        for x in (d, d ^ 1):
            if dirs[x] < 0:
                dirs[x] = (dirs[x ^ 1] + 2) % 4
            v, i = pos[x]
            darts = rep.rot[v]
            cur = dirs[x]
            for j in range(1, len(darts)):
                cur = (cur + rep.angles[v][(i + j - 1) % len(darts)] // 90) % 4
                y = darts[(i + j) % len(darts)]
                if dirs[y] < 0:
                    dirs[y] = cur
                    queue.append(y)
    return dirs


def build_ortho_rep(assign: SpiralityAssignment) -> OrthoRep:
    """Realize the assignment as edge directions, then read off the angles."""
    view = assign.view
    g = view.tree.graph
    nodes = view.tree.nodes
    target = assign.target
    dirs: list[int | None] = [None] * g.m

    def put(e: int, frm: int, d: int) -> None:
        if dirs[e] is not None:
            raise InternalInfeasible(f"edge {e} placed twice")
        dirs[e] = d % 4 if g.edges[e][0] == frm else (d + 2) % 4

    # ``a`` is the direction in which the spine passes the first pole
    stack = [(view.root_child, 2)]
    while stack:
        x, a = stack.pop()
        nd = nodes[x]
        s = target[x]
        if nd.kind == Q:
            vs, es = view.chain_vertices(x), view.chain_edges(x)
            step = -1 if s > 0 else 1
            d = a
            for i, e in enumerate(es):
                if 1 <= i <= abs(s):
                    d += step
                put(e, vs[i], d)
        elif nd.kind == S:
            for c in view.children[x]:
                stack.append((c, a))
                a -= target[c]
        else:
            lay = assign.layout[x]
            if lay.alphas is None:
                left, center, right = lay.order
                stack.extend([(left, a + 1), (center, a), (right, a - 1)])
            else:
                ul, ur, _, _ = lay.alphas
                left, right = lay.order
                stack.extend([(left, a + ul), (right, a - ur)])
    rho = view.root
    vs, es = view.chain_vertices(rho), view.chain_edges(rho)
    d = 2 - assign.root_sigma
    for j, idx in enumerate(range(len(es) - 1, -1, -1)):
        if 1 <= j <= assign.root_k:
            d -= 1
        put(es[idx], vs[idx + 1], d)
    if d % 4 != 2:
        raise InternalInfeasible("reference chain does not close the outer cycle")
    if any(x is None for x in dirs):
        raise InternalInfeasible("some edge received no direction")
    e0 = es[0]
    anchor = 2 * e0 if g.edges[e0][0] == vs[0] else 2 * e0 + 1
    return rep_from_directions(g.n, g.edges, dirs, anchor)


def cycle_rep(g: Graph) -> OrthoRep:
    """A rectangle for a simple cycle with at least four vertices."""
    if not is_simple_cycle(g) or g.n < 4:
        raise InternalInfeasible("not a cycle with four or more vertices")
    order = [0]
    prev_e = -1
    edges_walk = []
    while True:
        v = order[-1]
        e = next(e for e in g.adjacency[v] if e != prev_e)
        w = g.other(e, v)
        edges_walk.append(e)
        if w == 0:
            break
        order.append(w)
        prev_e = e
    dirs = [0] * g.m
    for i, e in enumerate(edges_walk):
        d = (0, 3, 2)[i] if i < 3 else 1
        dirs[e] = d if g.edges[e][0] == order[i] else (d + 2) % 4
    e0 = edges_walk[0]
    anchor = 2 * e0 if g.edges[e0][0] == 0 else 2 * e0 + 1
    return rep_from_directions(g.n, g.edges, dirs, anchor)


# ---------------------------------------------------------------------------
# measuring
# ---------------------------------------------------------------------------


def _turns(ds: list[int]) -> int:
    total = 0
    for a, b in zip(ds, ds[1:]):
        t = TURN[(b - a) % 4]
        if t == -2:
            raise InternalInfeasible("spine reverses on itself")
        total += t
    return total


def measure_spirality(rep: OrthoRep, view: RootedView, node: int, dirs: list[int] | None = None) -> int:
    """Right minus left turns along a spine of the node's component.

    The spine runs between the aliases of the poles: a pole with one edge in
    the component is its own alias, otherwise the spine starts (or ends) on
    the edge outside the component. Two different paths are measured and must
    agree.
    """
    if node == view.root:
        raise ValueError("the root has no spirality")
    if dirs is None:
        dirs = dart_directions(rep)
    edges = rep.edges
    inside = set(view.pertinent_edges(node))
    u, v = view.poles[node]
    pos = {}
    for w, darts in enumerate(rep.rot):
        for i, d in enumerate(darts):
            pos[d] = (w, i)

    def outside(w: int) -> int | None:
        darts = [d for d in rep.rot[w] if d >> 1 not in inside]
        own = len(rep.rot[w]) - len(darts)
        if own <= 1:
            return None
        if len(darts) != 1:
            raise InternalInfeasible(f"pole {w} has {len(darts)} edges outside its component")
        return darts[0]

    before, after = outside(u), outside(v)
    results = []
    for ccw in (True, False):
        path = _find_path(rep, pos, inside, u, v, ccw)
        ds = [dirs[d] for d in path]
        if before is not None:
            ds.insert(0, dirs[before ^ 1])
        if after is not None:
            ds.append(dirs[after])
        results.append(_turns(ds))
    if results[0] != results[1]:
        raise InternalInfeasible(f"spirality of node {node} depends on the path: {results}")
    return results[0]


def _find_path(rep: OrthoRep, pos, inside: set[int], u: int, v: int, ccw: bool) -> list[int]:
    """Simple u-v path inside the component, turning first one way or the other."""
    edges = rep.edges
    visited = {u}
    path: list[int] = []
    stack = [_candidates(rep, pos, inside, u, None, ccw)]
    while stack:
        nxt = next(stack[-1], None)
        if nxt is None:
            stack.pop()
            if path:
                visited.discard(_head(edges, path.pop()))
            continue
        w = _head(edges, nxt)
        if w in visited:
            continue
        path.append(nxt)
        if w == v:
            return path
        visited.add(w)
        stack.append(_candidates(rep, pos, inside, w, nxt, ccw))
    raise InternalInfeasible(f"no path between poles {u} and {v}")


def _candidates(rep, pos, inside, w, arrived, ccw):
    darts = rep.rot[w]
    k = len(darts)
    start = pos[arrived ^ 1][1] if arrived is not None else 0
    order = range(1, k + 1) if ccw else range(k - 1, -1, -1)
    for j in order:
        d = darts[(start + j) % k]
        if d >> 1 in inside and (arrived is None or d != arrived ^ 1):
            yield d


# ---------------------------------------------------------------------------
# compaction
# ---------------------------------------------------------------------------


@dataclass
class Drawing:
    coords: list[tuple[int, int]]
    edges: list[tuple[int, int]]

    def to_dict(self) -> dict:
        return {"coords": [list(c) for c in self.coords], "edges": [list(e) for e in self.edges]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


class _Plane:
    """Mutable plane graph keyed by directions: ``out[v][d]`` is an edge id."""

    def __init__(self, n: int, edges, dirs):
        self.ends = [list(e) for e in edges]
        self.dirs = [d % 4 for d in dirs]
        self.out: list[dict[int, int]] = [{} for _ in range(n)]
        for e, (a, b) in enumerate(self.ends):
            self._attach(e)

    def _attach(self, e: int) -> None:
        a, b = self.ends[e]
        d = self.dirs[e]
        for w, dd in ((a, d), (b, (d + 2) % 4)):
            if dd in self.out[w]:
                raise InternalInfeasible(f"direction clash at vertex {w}")
            self.out[w][dd] = e

    def vertex(self) -> int:
        self.out.append({})
        return len(self.out) - 1

    def edge(self, a: int, b: int, d: int) -> int:
        self.ends.append([a, b])
        self.dirs.append(d % 4)
        e = len(self.ends) - 1
        self._attach(e)
        return e

    def head(self, v: int, d: int) -> int:
        a, b = self.ends[self.out[v][d]]
        return b if a == v else a

    def next_dart(self, v: int, d: int) -> tuple[int, int, int]:
        """Follow dart (v, d) and keep the face on the right: (head, next dir, turn)."""
        w = self.head(v, d)
        for dd in (3, 0, 1, 2):
            nd = (d + dd) % 4
            if nd in self.out[w]:
                return w, nd, TURN[dd]
        raise AssertionError("isolated vertex")

    def face(self, v: int, d: int) -> list[tuple[int, int, int]]:
        """Corners (vertex, arrival dir, turn) in order, starting after dart (v, d)."""
        out = []
        start = (v, d)
        cur = start
        while True:
            w, nd, t = self.next_dart(*cur)
            out.append((w, cur[1], t))
            cur = (w, nd)
            if cur == start:
                return out

    def split(self, v: int, d: int) -> int:
        """Subdivide the edge leaving ``v`` in direction ``d``; returns the new vertex."""
        e = self.out[v][d]
        y = self.head(v, d)
        x = self.vertex()
        del self.out[y][(d + 2) % 4]
        self.ends[e] = [v, x]
        self.dirs[e] = d
        self.out[x][(d + 2) % 4] = e
        self.edge(x, y, d)
        return x


def _refine_face(pl: _Plane, done: set, v0: int, d0: int) -> None:
    corners = []
    cur = (v0, d0)
    while True:
        w, nd, t = pl.next_dart(*cur)
        if t == -2:
            raise InternalInfeasible("vertex of degree one inside a face")
        if t:
            corners.append([w, cur[1], t, nd])
        cur = (w, nd)
        if cur == (v0, d0):
            break
    reflex = sum(1 for c in corners if c[2] == -1)
    p = 0
    while reflex:
        k = len(corners)
        i1, i2 = (p + 1) % k, (p + 2) % k
        r, a, b = corners[p], corners[i1], corners[i2]
        if r[2] == -1 and a[2] == 1 and b[2] == 1:
            arrive = r[1]
            y = pl.head(b[0], b[3])
            x = pl.split(b[0], b[3])
            if (y, (b[3] + 2) % 4) in done:
                done.add((x, (b[3] + 2) % 4))
            pl.edge(r[0], x, arrive)
            _mark(pl, done, x, (arrive + 2) % 4)
            corners[p] = [x, arrive, 1, b[3]]
            for i in sorted((i1, i2), reverse=True):
                del corners[i]
                if i < p:
                    p -= 1
            reflex -= 1
            p = (p - 2) % len(corners)
        else:
            p = (p + 1) % k
    _mark(pl, done, v0, d0)


def _mark(pl: _Plane, done: set, v: int, d: int) -> None:
    cur = (v, d)
    while cur not in done:
        done.add(cur)
        w, nd, _ = pl.next_dart(*cur)
        cur = (w, nd)


def compact(rep: OrthoRep) -> Drawing:
    """Integer grid drawing of a valid representation.

    A rectangular frame is attached to the outside, every face is cut into
    rectangles with dummy vertices and edges, and coordinates come from
    longest paths over the horizontal and vertical constraint orders.
    """
    n0 = rep.n
    ddirs = dart_directions(rep)
    pl = _Plane(n0, rep.edges, [ddirs[2 * e] for e in range(len(rep.edges))])

    # frame
    ov, od = _tail(rep.edges, rep.outer), ddirs[rep.outer]
    corner = next(
        (w, arr) for w, arr, t in pl.face(ov, od) if t <= 0
    )
    w, arr = corner
    d = (arr + 3) % 4
    x = pl.vertex()
    pl.edge(w, x, d)
    c = [pl.vertex() for _ in range(4)]
    pl.edge(x, c[0], d - 1)
    pl.edge(c[0], c[1], d - 2)
    pl.edge(c[1], c[2], d + 1)
    pl.edge(c[2], c[3], d)
    pl.edge(c[3], x, d - 1)
    done: set[tuple[int, int]] = set()
    _mark(pl, done, c[1], d % 4)  # the frame's outside

    v = 0
    while v < len(pl.out):
        for dd in list(pl.out[v]):
            if (v, dd) not in done and dd in pl.out[v]:
                _refine_face(pl, done, v, dd)
        v += 1

    coords = _longest_paths(pl)
    base_x = min(coords[v][0] for v in range(n0)) if n0 else 0
    base_y = min(coords[v][1] for v in range(n0)) if n0 else 0
    pts = [(coords[v][0] - base_x, coords[v][1] - base_y) for v in range(n0)]
    return Drawing(pts, [tuple(e) for e in rep.edges])


def _longest_paths(pl: _Plane) -> list[tuple[int, int]]:
    n = len(pl.out)
    xs, ys = _DSU(n), _DSU(n)
    for e, (a, b) in enumerate(pl.ends):
        (xs if pl.dirs[e] % 2 else ys).union(a, b)
    coord = []
    for axis, cls in ((0, xs), (1, ys)):
        succ: dict[int, list[int]] = {}
        indeg: dict[int, int] = {}
        for e, (a, b) in enumerate(pl.ends):
            d = pl.dirs[e]
            if d % 2 != axis:
                continue
            lo, hi = (a, b) if d in (0, 1) else (b, a)
            p, q = cls.find(lo), cls.find(hi)
            succ.setdefault(p, []).append(q)
            indeg[q] = indeg.get(q, 0) + 1
        roots = {cls.find(v) for v in range(n)}
        level = {r: 0 for r in roots}
        queue = deque(r for r in roots if indeg.get(r, 0) == 0)
        seen = 0
        while queue:
            p = queue.popleft()
            seen += 1
            for q in succ.get(p, ()):
                if level[p] + 1 > level[q]:
                    level[q] = level[p] + 1
                indeg[q] -= 1
                if indeg[q] == 0:
                    queue.append(q)
        if seen != len(roots):
            raise InternalInfeasible("cyclic placement constraints")
        coord.append([level[cls.find(v)] for v in range(n)])
    return list(zip(coord[0], coord[1]))


class _DSU:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def drawing_problems(dr: Drawing, rep: OrthoRep | None = None) -> list[str]:
    """Geometric defects: shared points, bent or mis-directed edges, crossings."""
    problems = []
    if len(set(dr.coords)) != len(dr.coords):
        problems.append("two vertices share a point")
    segs = []
    ddirs = dart_directions(rep) if rep is not None else None
    for e, (a, b) in enumerate(dr.edges):
        (x1, y1), (x2, y2) = dr.coords[a], dr.coords[b]
        if x1 != x2 and y1 != y2:
            problems.append(f"edge {e} is not axis-aligned")
        if ddirs is not None:
            dx, dy = x2 - x1, y2 - y1
            want = {0: (1, 0), 1: (0, 1), 2: (-1, 0), 3: (0, -1)}[ddirs[2 * e]]
            if (dx > 0) - (dx < 0) != want[0] or (dy > 0) - (dy < 0) != want[1]:
                problems.append(f"edge {e} points the wrong way")
        segs.append((min(x1, x2), max(x1, x2), min(y1, y2), max(y1, y2)))
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            if _bad_contact(dr, i, j, segs[i], segs[j]):
                problems.append(f"edges {i} and {j} cross or overlap")
    return problems


def count_crossings(dr: Drawing) -> int:
    segs = []
    for a, b in dr.edges:
        (x1, y1), (x2, y2) = dr.coords[a], dr.coords[b]
        segs.append((min(x1, x2), max(x1, x2), min(y1, y2), max(y1, y2)))
    return sum(
        _bad_contact(dr, i, j, segs[i], segs[j])
        for i in range(len(segs))
        for j in range(i + 1, len(segs))
    )


def _bad_contact(dr: Drawing, i: int, j: int, s, t) -> bool:
    lx, hx = max(s[0], t[0]), min(s[1], t[1])
    ly, hy = max(s[2], t[2]), min(s[3], t[3])
    if lx > hx or ly > hy:
        return False
    if lx != hx or ly != hy:
        return True
    shared = set(dr.edges[i]) & set(dr.edges[j])
    return not any(dr.coords[w] == (lx, ly) for w in shared)


def to_svg(dr: Drawing, scale: int = 20, margin: int = 10) -> bytes:
    """Deterministic SVG: one single-segment polyline per edge, a circle per vertex."""
    xs = [x for x, _ in dr.coords] or [0]
    ys = [y for _, y in dr.coords] or [0]
    width = (max(xs) - min(xs)) * scale + 2 * margin
    height = (max(ys) - min(ys)) * scale + 2 * margin

    def px(x: int, y: int) -> tuple[int, int]:
        # SVG y grows downward
        return (x - min(xs)) * scale + margin, (max(ys) - y) * scale + margin

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<g stroke="black" stroke-width="2" fill="none">',
    ]
    for a, b in dr.edges:
        x1, y1 = px(*dr.coords[a])
        x2, y2 = px(*dr.coords[b])
        lines.append(f'<polyline points="{x1},{y1} {x2},{y2}"/>')
    lines.append("</g>")
    lines.append('<g fill="white" stroke="black">')
    for v, (x, y) in enumerate(dr.coords):
        cx, cy = px(x, y)
        lines.append(f'<circle cx="{cx}" cy="{cy}" r="3"><title>{v}</title></circle>')
    lines.append("</g>")
    lines.append("</svg>")
    return ("\n".join(lines) + "\n").encode("utf-8")


# ---------------------------------------------------------------------------
# pipeline
# ---------------------------------------------------------------------------


@dataclass
class Witness:
    rep: OrthoRep
    drawing: Drawing
    assignment: SpiralityAssignment | None = None


def build_witness(g: Graph, report=None) -> Witness:
    """Representation and drawing for a graph that tests positive."""
    from .tester import component_sets, test

    if report is None:
        report = test(g)
    if not report.rectilinear_planar:
        raise ValueError("graph is not rectilinear planar")
    if report.tree is None:
        rep = cycle_rep(g)
        return Witness(rep, compact(rep))
    sets = component_sets(g, report.witness_root, report.tree)
    view = report.tree.root_at(report.witness_root)
    assign = assign_spiralities(view, sets)
    rep = build_ortho_rep(assign)
    if not verify_ortho(rep):
        raise InternalInfeasible("witness representation failed verification")
    return Witness(rep, compact(rep), assign)
