"""Shared helpers for randomized property tests (all seeded, all tiny)."""

from __future__ import annotations

import random

from bootperc.graphs import Graph


def random_graph(rng: random.Random, max_vertices: int = 8, edge_prob: float = 0.45) -> Graph:
    n = rng.randint(1, max_vertices)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < edge_prob
    ]
    return Graph.from_edges(n, edges)


def random_vertex_seed(rng: random.Random, g: Graph) -> frozenset[int]:
    return frozenset(v for v in range(g.vertex_count) if rng.random() < 0.3)


def random_edge_seed(rng: random.Random, g: Graph) -> frozenset[tuple[int, int]]:
    return frozenset(e for e in g.edge_list() if rng.random() < 0.3)
