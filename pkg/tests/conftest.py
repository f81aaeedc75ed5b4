from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from rectiplanar.graph import Graph  # noqa: E402


def chains(*lengths: int, ends=(0, 1)) -> Graph:
    """Parallel chains of the given lengths between two poles."""
    u, v = ends
    n = 2
    edges = []
    for ell in lengths:
        path = [u] + list(range(n, n + ell - 1)) + [v]
        n += ell - 1
        edges.extend(zip(path, path[1:]))
    return Graph.from_edges(n, edges)


@pytest.fixture
def theta() -> Graph:
    return chains(2, 2, 2)


@pytest.fixture
def c4() -> Graph:
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
