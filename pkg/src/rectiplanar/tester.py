"""Rectilinear planarity test over all Q*-node roots with a shared directed memo."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from .errors import DegreeExceeded, NotBiconnected, NotIndependentParallel
from .graph import Graph, is_biconnected, is_simple_cycle
from .spirality import (
    EMPTY,
    SNodeSummary,
    SpiralitySet,
    p_node_set,
    qstar_set,
    root_feasible,
    s_node_set,
    s_summary,
    s_summary_replace,
)
from .spq import P, Q, S, SpqTree, build_spq_tree

REASON_SHORT_CYCLE = "cycle with fewer than 4 vertices"
REASON_NO_ROOT = "no feasible root"


@dataclass
class TestReport:
    __test__ = False  # keep pytest from collecting this class

    rectilinear_planar: bool
    witness_root: int | None
    roots_tried: int
    reason: str | None = None
    elapsed_ms: float = 0.0
    per_root_sets: dict[int, SpiralitySet] | None = None
    computations: int = 0
    tree_edges: int = 0
    tree: SpqTree | None = field(default=None, repr=False, compare=False)
    table: DirectedSetTable | None = field(default=None, repr=False, compare=False)

    def to_dict(self) -> dict:
        return {
            "rectilinear_planar": self.rectilinear_planar,
            "witness_root": self.witness_root,
            "roots_tried": self.roots_tried,
            "reason": self.reason,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


class DirectedSetTable:
    """Spirality sets keyed by directed tree edge ``(node, parent)``.

    Each S-node keeps the summary of its children for the first parent it was
    seen with; any other parent is handled by swapping one child in the summary.
    """

    def __init__(self, tree: SpqTree):
        self.tree = tree
        self.memo: dict[tuple[int, int], SpiralitySet] = {}
        self.s_base: dict[int, tuple[int, SNodeSummary]] = {}
        self.computations = 0

    def get(self, node: int, parent: int) -> SpiralitySet:
        memo = self.memo
        key = (node, parent)
        if key in memo:
            return memo[key]
        nodes = self.tree.nodes
        stack = [key]
        while stack:
            x, par = stack[-1]
            if (x, par) in memo:
                stack.pop()
                continue
            nd = nodes[x]
            if nd.kind == Q:
                value = qstar_set(len(nd.chain_edges))
            else:
                base = self.s_base.get(x) if nd.kind == S else None
                if base is not None and base[0] != par:
                    deps = [(base[0], x), (par, x)]
                else:
                    deps = [(c, x) for c in nd.neighbors if c != par]
                missing = [d for d in deps if d not in memo]
                if missing:
                    stack.extend(missing)
                    continue
                if nd.kind == P:
                    value = p_node_set([memo[d] for d in deps])
                elif base is None:
                    summary = s_summary(memo[d] for d in deps)
                    self.s_base[x] = (par, summary)
                    value = s_node_set(summary)
                elif base[0] == par:
                    value = s_node_set(base[1])
                else:
                    summary = s_summary_replace(base[1], memo[(par, x)], memo[(base[0], x)])
                    value = s_node_set(summary)
            memo[(x, par)] = value
            self.computations += 1
            stack.pop()
        return memo[key]


def check_class(g: Graph) -> SpqTree | None:
    """Validate the input class; returns None for a simple cycle."""
    if g.max_degree() > 4:
        raise DegreeExceeded(f"maximum degree {g.max_degree()} exceeds 4")
    if not is_biconnected(g):
        raise NotBiconnected("graph is not biconnected")
    if is_simple_cycle(g):
        return None
    tree = build_spq_tree(g)
    if not tree.is_independent_parallel():
        shared = sorted(w for w, c in tree.p_pole_counts().items() if c > 1)
        raise NotIndependentParallel(f"vertex {shared[0]} is a pole of several P-nodes")
    return tree


def test(g: Graph, all_roots: bool = False, root_order=None) -> TestReport:
    """Decide rectilinear planarity of ``g``.

    Input-class violations raise an :class:`InputError` subclass. With
    ``all_roots`` every root is evaluated and ``per_root_sets`` is filled.
    """
    start = time.perf_counter()
    tree = check_class(g)
    if tree is None:
        ok = g.n >= 4
        return TestReport(
            rectilinear_planar=ok,
            witness_root=0 if ok else None,
            roots_tried=1,
            reason=None if ok else REASON_SHORT_CYCLE,
            elapsed_ms=(time.perf_counter() - start) * 1000,
        )
    table = DirectedSetTable(tree)
    roots = tree.qnodes if root_order is None else list(root_order)
    witness = None
    tried = 0
    per_root: dict[int, SpiralitySet] | None = {} if all_roots else None
    for rho in roots:
        tried += 1
        nd = tree.nodes[rho]
        (rc,) = nd.neighbors
        s = table.get(rc, rho)
        if per_root is not None:
            per_root[rho] = s
        if s is not EMPTY and not s.is_empty and root_feasible(s, len(nd.chain_edges)):
            if witness is None:
                witness = rho
            if not all_roots:
                break
    return TestReport(
        rectilinear_planar=witness is not None,
        witness_root=witness,
        roots_tried=tried,
        reason=None if witness is not None else REASON_NO_ROOT,
        elapsed_ms=(time.perf_counter() - start) * 1000,
        per_root_sets=per_root,
        computations=table.computations,
        tree_edges=tree.tree_edge_count(),
        tree=tree,
        table=table,
    )


test.__test__ = False  # the name would otherwise be collected by pytest


def component_sets(g: Graph, root: int, tree: SpqTree | None = None) -> dict[int, SpiralitySet]:
    """Fresh per-node sets for the tree rooted at Q*-node ``root`` (no shared memo)."""
    if tree is None:
        tree = check_class(g)
        if tree is None:
            raise ValueError("simple cycles have no decomposition tree")
    view = tree.root_at(root)
    nodes = tree.nodes
    out: dict[int, SpiralitySet] = {}
    for x in view.order:
        if x == root:
            continue
        nd = nodes[x]
        kids = [out[c] for c in view.children[x]]
        if nd.kind == Q:
            out[x] = qstar_set(len(nd.chain_edges))
        elif nd.kind == P:
            out[x] = p_node_set(kids)
        else:
            out[x] = s_node_set(s_summary(kids))
    return out
