"""SPQ*-tree of a biconnected series-parallel multigraph.

The tree is built by series/parallel reduction over the multigraph whose
edges are the maximal chains of ``g`` (paths through degree-2 vertices).
Reductions record a composition term; once the graph has collapsed to a
single edge the terms are flattened into S-, P- and Q*-nodes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import NotBiconnected, NotSeriesParallel, SimpleCycle
from .graph import Graph, is_biconnected, is_simple_cycle

S, P, Q = "S", "P", "Q"


@dataclass
class SpqNode:
    kind: str
    neighbors: list[int] = field(default_factory=list)
    # Q*: chain vertices c0..cl and the edge ids between them
    chain: list[int] | None = None
    chain_edges: list[int] | None = None
    # S: skeleton cycle; neighbors[i] sits on the skeleton edge (cycle[i], cycle[i+1])
    cycle: list[int] | None = None
    # P: the two poles shared by every skeleton edge
    poles: tuple[int, int] | None = None

    @property
    def length(self) -> int:
        return len(self.chain_edges)


class SpqTree:
    """Unrooted SPQ*-tree. Node ids are list indices into ``nodes``."""

    def __init__(self, graph: Graph, nodes: list[SpqNode]):
        self.graph = graph
        self.nodes = nodes
        self._index = [{nb: i for i, nb in enumerate(nd.neighbors)} for nd in nodes]

    def __len__(self) -> int:
        return len(self.nodes)

    @property
    def qnodes(self) -> list[int]:
        return [i for i, nd in enumerate(self.nodes) if nd.kind == Q]

    def link_poles(self, node: int, nbr: int) -> tuple[int, int]:
        """Endpoints of the virtual edge shared by two adjacent nodes, as seen from ``node``."""
        nd = self.nodes[node]
        if nd.kind == Q:
            return nd.chain[0], nd.chain[-1]
        if nd.kind == P:
            return nd.poles
        i = self._index[node][nbr]
        cyc = nd.cycle
        return cyc[i], cyc[(i + 1) % len(cyc)]

    def neighbor_slot(self, node: int, nbr: int) -> int:
        return self._index[node][nbr]

    def tree_edge_count(self) -> int:
        return sum(len(nd.neighbors) for nd in self.nodes) // 2

    def p_pole_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for nd in self.nodes:
            if nd.kind == P:
                for w in nd.poles:
                    counts[w] = counts.get(w, 0) + 1
        return counts

    def is_independent_parallel(self) -> bool:
        return all(c <= 1 for c in self.p_pole_counts().values())

    def root_at(self, rho: int) -> RootedView:
        return root_at(self, rho)

    def dump(self) -> str:
        """Indented text dump for debugging (format not stable)."""
        lines = []
        for i, nd in enumerate(self.nodes):
            if nd.kind == Q:
                detail = f"chain={nd.chain}"
            elif nd.kind == S:
                detail = f"cycle={nd.cycle}"
            else:
                detail = f"poles={nd.poles}"
            lines.append(f"{i} {nd.kind} {detail} -> {nd.neighbors}")
        return "\n".join(lines)

    def to_dot(self) -> str:
        out = ["graph spq {"]
        for i, nd in enumerate(self.nodes):
            out.append(f'  n{i} [label="{nd.kind}{i}"];')
        for i, nd in enumerate(self.nodes):
            out.extend(f"  n{i} -- n{j};" for j in nd.neighbors if i < j)
        out.append("}")
        return "\n".join(out)


@dataclass
class RootedView:
    tree: SpqTree
    root: int
    parent: list[int]
    poles: list[tuple[int, int] | None]
    order: list[int]
    children: list[list[int]]

    @property
    def root_child(self) -> int:
        return self.children[self.root][0]

    def chain_vertices(self, node: int) -> list[int]:
        """Q*-node chain listed from its first pole to its second pole."""
        nd = self.tree.nodes[node]
        u, _ = self.poles[node]
        return nd.chain if nd.chain[0] == u else nd.chain[::-1]

    def chain_edges(self, node: int) -> list[int]:
        nd = self.tree.nodes[node]
        u, _ = self.poles[node]
        return nd.chain_edges if nd.chain[0] == u else nd.chain_edges[::-1]

    def pertinent_edges(self, node: int) -> list[int]:
        out: list[int] = []
        stack = [node]
        nodes = self.tree.nodes
        while stack:
            x = stack.pop()
            if nodes[x].kind == Q:
                out.extend(nodes[x].chain_edges)
            else:
                stack.extend(self.children[x])
        return out


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------


def find_chains(g: Graph) -> list[tuple[list[int], list[int]]]:
    """Maximal chains as (vertices, edges); every end vertex has degree >= 3."""
    used = [False] * g.m
    chains = []
    for s in range(g.n):
        if g.degree(s) == 2:
            continue
        for e0 in g.adjacency[s]:
            if used[e0]:
                continue
            verts, es = [s], []
            e, v = e0, s
            while True:
                used[e] = True
                es.append(e)
                v = g.other(e, v)
                verts.append(v)
                if g.degree(v) != 2:
                    break
                a, b = g.adjacency[v]
                e = b if a == e else a
            chains.append((verts, es))
    return chains


class _Terms:
    """Composition terms produced by the reduction (flat arrays for speed)."""

    def __init__(self):
        self.kind: list[str] = []
        self.ends: list[tuple[int, int]] = []
        self.data: list = []

    def add(self, kind: str, a: int, b: int, data) -> int:
        self.kind.append(kind)
        self.ends.append((a, b))
        self.data.append(data)
        return len(self.kind) - 1


def build_spq_tree(g: Graph) -> SpqTree:
    if is_simple_cycle(g):
        raise SimpleCycle("graph is a simple cycle")
    if not is_biconnected(g):
        raise NotBiconnected("graph is not biconnected")

    chains = find_chains(g)
    terms = _Terms()
    # reduced multigraph: live edge -> term; incidence per vertex
    inc: dict[int, set[int]] = {}
    edge_ends: dict[int, tuple[int, int]] = {}
    by_pair: dict[tuple[int, int], int] = {}
    next_edge = 0

    def add_edge(a: int, b: int, term: int) -> None:
        nonlocal next_edge
        key = (a, b) if a < b else (b, a)
        other = by_pair.get(key)
        if other is not None:
            # parallel merge into the existing edge's term
            t_old = edge_term[other]
            if terms.kind[t_old] == P:
                terms.data[t_old].append(term)
            else:
                p = terms.add(P, key[0], key[1], [t_old, term])
                edge_term[other] = p
            # the merged edge keeps its id; degrees of a and b drop by one
            for w in key:
                if len(inc[w]) == 2:
                    queue.append(w)
            return
        eid = next_edge
        next_edge += 1
        edge_term[eid] = term
        edge_ends[eid] = key
        by_pair[key] = eid
        inc.setdefault(a, set()).add(eid)
        inc.setdefault(b, set()).add(eid)

    edge_term: dict[int, int] = {}
    queue: deque[int] = deque()
    for idx, (verts, _) in enumerate(chains):
        t = terms.add(Q, verts[0], verts[-1], idx)
        add_edge(verts[0], verts[-1], t)
    queue.extend(v for v, es in inc.items() if len(es) == 2)

    while queue:
        v = queue.popleft()
        es = inc.get(v)
        if es is None or len(es) != 2:
            continue
        e1, e2 = es
        a = _far(edge_ends[e1], v)
        b = _far(edge_ends[e2], v)
        if a == b:
            continue  # cannot happen once parallels are merged; keep the guard cheap
        t1, t2 = edge_term.pop(e1), edge_term.pop(e2)
        for e, far in ((e1, a), (e2, b)):
            del by_pair[edge_ends.pop(e)]
            inc[far].discard(e)
        del inc[v]
        s = terms.add(S, a, b, (t1, t2, v))
        add_edge(a, b, s)

    if len(edge_term) != 1:
        raise NotSeriesParallel("graph has a triconnected component")
    (top,) = edge_term.values()
    return _materialize(g, chains, terms, top)


def _far(ends: tuple[int, int], v: int) -> int:
    return ends[1] if ends[0] == v else ends[0]


def _expand(terms: _Terms, t: int, x: int, y: int) -> list[tuple[int, int, int]]:
    """Flatten nested series terms into (term, from, to) items from x to y."""
    out = []
    stack = [(t, x, y)]
    while stack:
        t, x, y = stack.pop()
        if terms.kind[t] != S:
            out.append((t, x, y))
            continue
        t1, t2, mid = terms.data[t]
        a, _ = terms.ends[t]
        if x == a:
            stack.append((t2, mid, y))
            stack.append((t1, x, mid))
        else:
            stack.append((t1, mid, y))
            stack.append((t2, x, mid))
    return out


def _materialize(g: Graph, chains, terms: _Terms, top: int) -> SpqTree:
    nodes: list[SpqNode] = []

    def new(kind: str, **kw) -> int:
        nodes.append(SpqNode(kind, **kw))
        return len(nodes) - 1

    def link(i: int, j: int) -> None:
        nodes[i].neighbors.append(j)
        nodes[j].neighbors.append(i)

    # work items: (term, parent node, from, to); parent is linked last for S-nodes
    work: list[tuple[int, int, int, int]] = []

    def make(t: int, x: int, y: int) -> int:
        kind = terms.kind[t]
        if kind == Q:
            verts, es = chains[terms.data[t]]
            return new(Q, chain=list(verts), chain_edges=list(es))
        if kind == P:
            i = new(P, poles=terms.ends[t])
            for c in _flatten_p(terms, t):
                work.append((c, i, *terms.ends[t]))
            return i
        items = _expand(terms, t, x, y)
        cyc = [x] + [it[2] for it in items]
        i = new(S, cycle=cyc)
        for c, a, b in items:
            work.append((c, i, a, b))
        return i

    a, b = terms.ends[top]
    kids = _flatten_p(terms, top)
    if len(kids) >= 3:
        root = new(P, poles=(a, b))
        for c in kids:
            work.append((c, root, a, b))
    else:
        items = _expand(terms, kids[0], a, b) + _expand(terms, kids[1], b, a)
        cyc = [it[1] for it in items]
        root = new(S, cycle=cyc)
        for c, x, y in items:
            work.append((c, root, x, y))

    # work is consumed in insertion order so S-node neighbor slots match cycle order
    head = 0
    pending_parent: list[tuple[int, int]] = []
    while head < len(work):
        t, par, x, y = work[head]
        head += 1
        child = make(t, x, y)
        nodes[par].neighbors.append(child)
        pending_parent.append((child, par))
    for child, par in pending_parent:
        nodes[child].neighbors.append(par)
    tree = SpqTree(g, nodes)
    _check_tree(tree)
    return tree


def _flatten_p(terms: _Terms, t: int) -> list[int]:
    if terms.kind[t] != P:
        return [t]
    out = []
    stack = [t]
    while stack:
        x = stack.pop()
        if terms.kind[x] == P:
            stack.extend(reversed(terms.data[x]))
        else:
            out.append(x)
    return out


def _check_tree(tree: SpqTree) -> None:
    for i, nd in enumerate(tree.nodes):
        if nd.kind == Q:
            assert len(nd.neighbors) == 1, f"Q*-node {i} has degree {len(nd.neighbors)}"
        else:
            assert len(nd.neighbors) >= 3, f"{nd.kind}-node {i} has degree {len(nd.neighbors)}"
        if nd.kind == S:
            assert len(nd.cycle) == len(nd.neighbors)
        for j in nd.neighbors:
            if nd.kind != Q:
                assert tree.nodes[j].kind != nd.kind, "adjacent nodes of the same kind"


# ---------------------------------------------------------------------------
# rooted views
# ---------------------------------------------------------------------------


def root_at(tree: SpqTree, rho: int) -> RootedView:
    """Root the tree at Q*-node ``rho``.

    Poles are ordered by a bipolar orientation with ``s, t`` the ends of the
    reference chain: P-children inherit ``(u, v)``, S-children follow the
    skeleton path from ``u`` to ``v``.
    """
    nodes = tree.nodes
    if nodes[rho].kind != Q:
        raise ValueError(f"node {rho} is not a Q*-node")
    count = len(nodes)
    parent = [-1] * count
    poles: list[tuple[int, int] | None] = [None] * count
    children: list[list[int]] = [[] for _ in range(count)]
    s, t = nodes[rho].chain[0], nodes[rho].chain[-1]
    poles[rho] = (s, t)
    (rc,) = nodes[rho].neighbors
    parent[rc] = rho
    children[rho] = [rc]
    poles[rc] = (s, t)
    preorder = [rho]
    stack = [rc]
    while stack:
        x = stack.pop()
        preorder.append(x)
        nd = nodes[x]
        u, v = poles[x]
        par = parent[x]
        if nd.kind == Q:
            continue
        if nd.kind == P:
            kids = [c for c in nd.neighbors if c != par]
            for c in kids:
                poles[c] = (u, v)
        else:
            k = len(nd.cycle)
            slot = tree.neighbor_slot(x, par)
            if nd.cycle[(slot + 1) % k] == u:
                idx = [(slot + j) % k for j in range(1, k)]
                kids = [nd.neighbors[i] for i in idx]
                for c, i in zip(kids, idx):
                    poles[c] = (nd.cycle[i], nd.cycle[(i + 1) % k])
            else:
                idx = [(slot - j) % k for j in range(1, k)]
                kids = [nd.neighbors[i] for i in idx]
                for c, i in zip(kids, idx):
                    poles[c] = (nd.cycle[(i + 1) % k], nd.cycle[i])
        children[x] = kids
        for c in kids:
            parent[c] = x
        stack.extend(reversed(kids))
    return RootedView(tree, rho, parent, poles, preorder[::-1], children)
