"""End-to-end acceptance checks, one test per criterion.

Each test prints a single ``PASS``/``FAIL`` line (visible with ``pytest -v``
or ``-s``) before asserting.
"""

from __future__ import annotations

import time

import pytest

import test_spirality as fixtures
from brute_sets import parallel_values, root_values, series_values, three_way, two_way
from rectiplanar.bench import run_bench, ratios
from rectiplanar.corpus import agreement, default_corpus, directed_components, set_matches_oracle
from rectiplanar.generators import gen_cycle, gen_lowerbound, gen_random_ipsp
from rectiplanar.spirality import (
    SpiralitySet,
    from_values,
    p2_admits,
    p2_set,
    p3_admits,
    p3_set,
    qstar_set,
    root_pair,
    s_node_set,
    s_summary,
)
from rectiplanar.tester import component_sets, test
from rectiplanar.witness import (
    build_witness,
    count_crossings,
    dart_directions,
    drawing_problems,
    measure_spirality,
    verify_ortho,
)


@pytest.fixture
def verdict(capsys):
    def _verdict(number: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {detail}")
        assert ok, detail

    return _verdict


@pytest.fixture(scope="module")
def corpus():
    return default_corpus(seed=1)


@pytest.fixture(scope="module")
def reports(corpus):
    return [test(g, all_roots=True) for g in corpus]


def _witness_violations(g, report=None) -> list[str]:
    w = build_witness(g, report)
    out = []
    if not verify_ortho(w.rep):
        out.append("representation does not verify")
    problems = drawing_problems(w.drawing, w.rep)
    if problems or count_crossings(w.drawing):
        out.append(f"drawing: {problems[:3]}")
    if w.assignment is not None:
        view = w.assignment.view
        dirs = dart_directions(w.rep)
        for x, t in w.assignment.target.items():
            got = measure_spirality(w.rep, view, x, dirs)
            if got != t:
                out.append(f"node {x}: measured {got}, assigned {t}")
    return out


def test_criterion_1_oracle_agreement(corpus, verdict):
    start = time.perf_counter()
    summary = agreement(corpus)
    elapsed = time.perf_counter() - start
    random_part = sum(1 for g in corpus[:500] if g.m <= 12)
    ok = (
        summary.total > 500
        and random_part == 500
        and not summary.disagreements
        and elapsed < 300
    )
    verdict(
        1,
        ok,
        f"{summary.agree}/{summary.total} agree ({summary.planar} rectilinear planar), "
        f"{len(summary.disagreements)} disagreements, {elapsed:.1f}s",
    )


def test_criterion_2_set_structure(corpus, reports, verdict):
    shape_bad = 0
    oracle_bad = 0
    compared = 0
    for g, report in zip(corpus, reports):
        for _key, s, comp, u, v in directed_components(report):
            compared += 1
            if not isinstance(s, SpiralitySet) or (not s.is_empty and from_values(s.values()) != s):
                shape_bad += 1
            if not set_matches_oracle(s, comp, u, v):
                oracle_bad += 1
    ok = compared > 0 and shape_bad == 0 and oracle_bad == 0
    verdict(2, ok, f"{compared} component sets, {shape_bad} bad shapes, {oracle_bad} oracle mismatches")


def test_criterion_3_cycle_rule(verdict):
    got = {n: test(gen_cycle(n)).rectilinear_planar for n in range(3, 13)}
    want = {n: n >= 4 for n in range(3, 13)}
    verdict(3, got == want, "C_3 false, C_4..C_12 true" if got == want else f"got {got}")


def test_criterion_4_lower_bound_family(verdict):
    start = time.perf_counter()
    lines = []
    ok = True
    for N in (2, 4):
        lb = gen_lowerbound(N)
        g = lb.graph
        report = test(g)
        if not report.rectilinear_planar:
            ok = False
            lines.append(f"N={N}: tested false")
            continue
        w = build_witness(g, report)
        view = w.assignment.view
        tree = view.tree
        by_vertices = {frozenset(tree.nodes[q].chain): q for q in tree.qnodes}
        dirs = dart_directions(w.rep)
        spirals = [
            measure_spirality(w.rep, view, by_vertices[frozenset(chain)], dirs)
            for chain in lb.g0_components
            if by_vertices[frozenset(chain)] != view.root
        ]
        top = max(abs(x) for x in spirals)
        verified = verify_ortho(w.rep)
        ok = ok and verified and top >= N + 2
        lines.append(f"N={N}: n={g.n}, verifies={verified}, max |spirality| {top} (need {N + 2})")
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 10
    verdict(4, ok, "; ".join(lines) + f"; {elapsed:.2f}s")


def test_criterion_5_witness_soundness(corpus, reports, verdict):
    checked = 0
    bad = []
    for g, report in zip(corpus, reports):
        if report.rectilinear_planar:
            checked += 1
            bad.extend(_witness_violations(g, report))
    for N in (2, 4):
        checked += 1
        bad.extend(_witness_violations(gen_lowerbound(N).graph))
    verdict(5, checked > 0 and not bad, f"{checked} accepted instances, {len(bad)} violations {bad[:3]}")


def test_criterion_6_rerooting(verdict):
    compared = 0
    mismatched = 0
    uncovered = 0
    graphs = 0
    seed = 0
    while graphs < 100:
        g = gen_random_ipsp(8 + seed % 18, 1000 + seed)
        seed += 1
        assert g.n <= 50
        report = test(g, all_roots=True)
        if report.tree is None:  # plain cycles have no tree to re-root
            continue
        graphs += 1
        memo = report.table.memo
        seen = set()
        for rho in report.tree.qnodes:
            view = report.tree.root_at(rho)
            for x, s in component_sets(g, rho, report.tree).items():
                key = (x, view.parent[x])
                if key in memo:
                    seen.add(key)
                    compared += 1
                    mismatched += memo[key] != s
        uncovered += len(set(memo) - seen)
    ok = compared > 0 and mismatched == 0 and uncovered == 0
    verdict(6, ok, f"{graphs} graphs, {compared} comparisons, {mismatched} mismatches")


@pytest.mark.slow
def test_criterion_7_linear_scaling(verdict):
    rows = run_bench(runs=5, seed=1)
    rs = ratios(rows)
    counter_ok = all(r.computations <= 2 * r.tree_edges for r in rows)
    ok = all(r <= 3 for r in rs) and counter_ok
    sizes = ", ".join(f"n={r.n}: {r.elapsed_ms:.0f}ms" for r in rows)
    verdict(7, ok, f"{sizes}; ratios {[round(r, 2) for r in rs]}; counter bound held={counter_ok}")


def test_criterion_8_algebra_fixtures(verdict):
    S = SpiralitySet.parse
    bad = []
    for ell, want in ((1, "[0]"), (3, "[0,2]^1"), (5, "[0,4]^1")):
        if qstar_set(ell) != S(want):
            bad.append(f"qstar {ell}")
    for kids, want in fixtures.S_NODE_FIXTURES:
        sets = [S(k) for k in kids]
        if s_node_set(s_summary(sets)) != S(want) or series_values([s.values() for s in sets]) != S(want).values():
            bad.append(f"s {kids}")
    for kids, sigma, want in fixtures.P3_ADMITS_FIXTURES:
        sets = [S(k) for k in kids]
        if p3_admits(*sets, sigma) is not want or three_way(*(s.values() for s in sets), sigma) is not want:
            bad.append(f"p3 admits {kids} {sigma}")
    for kids, want in fixtures.P3_SET_FIXTURES:
        sets = [S(k) for k in kids]
        if p3_set(*sets) != S(want) or parallel_values([s.values() for s in sets]) != S(want).values():
            bad.append(f"p3 {kids}")
    for kids, sigma, want in fixtures.P2_ADMITS_FIXTURES:
        sets = [S(k) for k in kids]
        if p2_admits(*sets, sigma) is not want or two_way(*(s.values() for s in sets), sigma) is not want:
            bad.append(f"p2 admits {kids} {sigma}")
    for kids, want in fixtures.P2_SET_FIXTURES:
        sets = [S(k) for k in kids]
        if p2_set(*sets) != S(want) or parallel_values([s.values() for s in sets]) != S(want).values():
            bad.append(f"p2 {kids}")
    for s, ell, want in fixtures.ROOT_FIXTURES:
        pairs = root_values(S(s).values(), ell)
        if root_pair(S(s), ell) != want or (pairs[0] if pairs else None) != want:
            bad.append(f"root {s} {ell}")
    total = 3 + sum(
        len(f)
        for f in (
            fixtures.S_NODE_FIXTURES,
            fixtures.P3_ADMITS_FIXTURES,
            fixtures.P3_SET_FIXTURES,
            fixtures.P2_ADMITS_FIXTURES,
            fixtures.P2_SET_FIXTURES,
            fixtures.ROOT_FIXTURES,
        )
    )
    verdict(8, not bad, f"{total - len(bad)}/{total} fixtures exact {bad}")
