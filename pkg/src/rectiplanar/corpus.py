"""Small-graph corpora and tester-versus-oracle agreement runs."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InputError
from .generators import gen_random_ipsp
from .graph import Graph, classify, is_simple_cycle
from .oracle import component_graph, oracle_spirality_set, oracle_test
from .spirality import SpiralitySet
from .tester import TestReport, test

EDGE = ("E",)


def random_corpus(count: int = 500, max_edges: int = 12, seed: int = 1) -> list[Graph]:
    """``count`` random instances with at most ``max_edges`` edges.

    Simple cycles are skipped (the cycle rule is checked on its own) and so
    are repeated edge lists.
    """
    out = []
    seen = set()
    s = seed
    while len(out) < count:
        g = gen_random_ipsp(4 + s % 6, s)
        s += 1
        if g.m > max_edges or is_simple_cycle(g) or g.edges in seen:
            continue
        seen.add(g.edges)
        out.append(g)
    return out


def _pieces(max_edges: int) -> list[set]:
    """Two-terminal series-parallel expressions by edge count.

    An expression is ``("E",)``, ``("S", child, ...)`` with ordered children
    or ``("P", child, ...)`` with sorted children; series children are never
    series and parallel children are never parallel.
    """
    by_size: list[set] = [set() for _ in range(max_edges + 1)]
    by_size[1].add(EDGE)
    for k in range(2, max_edges + 1):
        for a in range(1, k):
            for x in by_size[a]:
                for y in by_size[k - a]:
                    by_size[k].add(_series(x, y))
                    by_size[k].add(_parallel(x, y))
    return by_size


def _series(x, y):
    xs = x[1:] if x[0] == "S" else (x,)
    ys = y[1:] if y[0] == "S" else (y,)
    return ("S",) + xs + ys


def _parallel(x, y):
    xs = x[1:] if x[0] == "P" else (x,)
    ys = y[1:] if y[0] == "P" else (y,)
    return ("P",) + tuple(sorted(xs + ys))


def _realize(expr, edges: list, a: int, b: int, counter: list[int]) -> None:
    kind = expr[0]
    if kind == "E":
        edges.append((a, b))
    elif kind == "P":
        for c in expr[1:]:
            _realize(c, edges, a, b, counter)
    else:
        kids = expr[1:]
        cur = a
        for i, c in enumerate(kids):
            if i == len(kids) - 1:
                nxt = b
            else:
                nxt = counter[0]
                counter[0] += 1
            _realize(c, edges, cur, nxt, counter)
            cur = nxt


def exhaustive_corpus(max_edges: int = 8) -> list[Graph]:
    """Every piece with fewer than ``max_edges`` edges closed by one extra edge.

    Kept when the result has degree at most four and is independent-parallel.
    """
    graphs = []
    seen = set()
    for size in _pieces(max_edges - 1)[1:]:
        for expr in sorted(size, key=repr):
            closed = _parallel(expr, EDGE)
            if closed in seen:
                continue
            seen.add(closed)
            edges: list = []
            counter = [2]
            _realize(closed, edges, 0, 1, counter)
            g = Graph.from_edges(counter[0], edges)
            cls = classify(g)
            if cls.is_degree4 and cls.is_biconnected and cls.is_independent_parallel:
                graphs.append(g)
    return graphs


def default_corpus(seed: int = 1) -> list[Graph]:
    return random_corpus(500, 12, seed) + exhaustive_corpus(8)


@dataclass
class AgreementSummary:
    total: int = 0
    agree: int = 0
    planar: int = 0
    disagreements: list[tuple[Graph, bool, bool]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "total": self.total,
            "agree": self.agree,
            "disagree": len(self.disagreements),
            "rectilinear_planar": self.planar,
        }


def agreement(graphs) -> AgreementSummary:
    out = AgreementSummary()
    for g in graphs:
        mine = test(g).rectilinear_planar
        theirs = oracle_test(g).feasible
        out.total += 1
        out.planar += mine
        if mine == theirs:
            out.agree += 1
        else:
            out.disagreements.append((g, mine, theirs))
    return out


def directed_components(report: TestReport):
    """Yield ``(key, set, component, u, v)`` for every memoized directed set.

    ``component`` is the pertinent graph with compact labels; ``u`` and ``v``
    are its poles in those labels.
    """
    tree = report.tree
    if tree is None or report.table is None:
        return
    for (node, parent), s in report.table.memo.items():
        edges = _side_edges(tree, node, parent)
        comp, label = component_graph(tree.graph, edges)
        a, b = tree.link_poles(node, parent)
        yield (node, parent), s, comp, label[a], label[b]


def _side_edges(tree, node: int, parent: int) -> list[int]:
    out = []
    stack = [(node, parent)]
    while stack:
        x, p = stack.pop()
        nd = tree.nodes[x]
        if nd.kind == "Q":
            out.extend(nd.chain_edges)
        for c in nd.neighbors:
            if c != p:
                stack.append((c, x))
    return out


def set_matches_oracle(s: SpiralitySet, comp: Graph, u: int, v: int) -> bool:
    brute = oracle_spirality_set(comp, u, v)
    return sorted(x for x in brute if x >= 0) == s.values()


def check_graph_sets(g: Graph) -> list[str]:
    """Mismatches between memoized directed sets and the oracle for one graph."""
    try:
        report = test(g, all_roots=True)
    except InputError:
        return []
    problems = []
    for key, s, comp, u, v in directed_components(report):
        if not set_matches_oracle(s, comp, u, v):
            brute = sorted(x for x in oracle_spirality_set(comp, u, v) if x >= 0)
            problems.append(f"{key}: algebra {s} oracle {brute}")
    return problems
