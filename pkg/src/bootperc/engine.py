"""Percolation processes.

Three monotone activation processes, all reported as synchronous
rounds: round i holds exactly the elements that become active at step i
given everything active after step i-1.

* vertex process: an inactive vertex activates once at least r of its
  neighbors are active.
* star process on edges: an inactive edge uv activates once one of its
  endpoints is incident to at least r active edges (the candidate edge
  itself is inactive at test time and never counted).
* line process on edges: an inactive edge uv activates once the active
  edges incident to u or v (again excluding uv) number at least r in
  total; this is exactly the vertex process on the line graph.

With r = 0 every element qualifies immediately, so round 1 activates
everything not already in the seed, even from an empty seed.

Internally each process runs a work queue over remaining-threshold
counters, batched per round, so total work is O(|V| + sum of degrees of
activated elements) for the vertex process and the analogous bound for
the edge processes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from bootperc.errors import FormatError, PreconditionError
from bootperc.graphs import Edge, Graph, normalize_edge

_INACTIVE, _SCHEDULED, _ACTIVE = 0, 1, 2


@dataclass(frozen=True)
class ActivationTrace:
    """Full record of one percolation run.

    ``rounds[i]`` is the set of elements newly activated at step i+1;
    rounds are nonempty, pairwise disjoint and disjoint from the seed.
    ``final`` is the closure: seed plus every round.
    """

    seed: frozenset
    rounds: tuple[frozenset, ...]
    final: frozenset

    @property
    def round_count(self) -> int:
        return len(self.rounds)


def _check_r(r: int) -> None:
    if r < 0:
        raise PreconditionError("threshold r must be nonnegative")


def _check_vertex_seed(g: Graph, seed: Iterable[int]) -> frozenset[int]:
    out = frozenset(seed)
    for v in out:
        if not 0 <= v < g.vertex_count:
            raise PreconditionError(f"seed vertex {v} not in graph")
    return out


def _check_edge_seed(g: Graph, seed: Iterable[tuple[int, int]]) -> frozenset[Edge]:
    out = frozenset(normalize_edge(u, v) for u, v in seed)
    for e in out:
        if e not in g.edges:
            raise PreconditionError(f"seed edge {e} not in graph")
    return out


def percolate_vertices(g: Graph, r: int, seed: Iterable[int]) -> ActivationTrace:
    """Run the r-neighbor vertex process from ``seed`` to closure."""
    _check_r(r)
    seed_set = _check_vertex_seed(g, seed)
    active = bytearray(g.vertex_count)
    for v in seed_set:
        active[v] = 1
    counts = [0] * g.vertex_count
    for v in seed_set:
        for w in g.adjacency[v]:
            counts[w] += 1
    if r == 0:
        frontier = [v for v in range(g.vertex_count) if not active[v]]
    else:
        frontier = [
            v for v in range(g.vertex_count) if not active[v] and counts[v] >= r
        ]
    rounds: list[frozenset] = []
    while frontier:
        rounds.append(frozenset(frontier))
        for v in frontier:
            active[v] = 1
        next_frontier: list[int] = []
        for v in frontier:
            for w in g.adjacency[v]:
                counts[w] += 1
                # counts[w] passes r exactly once, so w is queued exactly once
                if counts[w] == r and not active[w]:
                    next_frontier.append(w)
        frontier = next_frontier
    final = seed_set.union(*rounds) if rounds else seed_set
    return ActivationTrace(seed_set, tuple(rounds), final)


def is_percolating_vertices(g: Graph, r: int, seed: Iterable[int]) -> bool:
    return len(percolate_vertices(g, r, seed).final) == g.vertex_count


def percolate_edges_star(g: Graph, r: int, seed: Iterable[tuple[int, int]]) -> ActivationTrace:
    """Run the star edge process from ``seed`` to closure.

    Activation rule: edge uv joins round i once, after round i-1, some
    endpoint carries at least r active edges.  Equivalently uv completes
    a star with r+1 edges whose other r edges are already active.
    """
    _check_r(r)
    seed_set = _check_edge_seed(g, seed)
    state = {e: _INACTIVE for e in g.edges}
    vcount = [0] * g.vertex_count
    for u, v in seed_set:
        state[(u, v)] = _ACTIVE
        vcount[u] += 1
        vcount[v] += 1
    frontier: list[Edge] = []
    for e in g.edge_list():
        u, v = e
        if state[e] == _INACTIVE and (r == 0 or vcount[u] >= r or vcount[v] >= r):
            state[e] = _SCHEDULED
            frontier.append(e)
    rounds: list[frozenset] = []
    while frontier:
        rounds.append(frozenset(frontier))
        for e in frontier:
            state[e] = _ACTIVE
        next_frontier: list[Edge] = []
        for u, v in frontier:
            for x in (u, v):
                vcount[x] += 1
                if vcount[x] == r:
                    # x just reached the threshold: everything inactive at x
                    # becomes activatable, and stays captured from here on
                    for w in g.adjacency[x]:
                        e2 = normalize_edge(x, w)
                        if state[e2] == _INACTIVE:
                            state[e2] = _SCHEDULED
                            next_frontier.append(e2)
        frontier = next_frontier
    final = seed_set.union(*rounds) if rounds else seed_set
    return ActivationTrace(seed_set, tuple(rounds), final)


def is_percolating_edges_star(g: Graph, r: int, seed: Iterable[tuple[int, int]]) -> bool:
    return percolate_edges_star(g, r, seed).final == g.edges


def percolate_edges_linegraph(
    g: Graph, r: int, seed: Iterable[tuple[int, int]]
) -> ActivationTrace:
    """Run the line-graph edge process from ``seed`` to closure.

    Activation rule: edge uv joins round i once the active edges meeting
    u plus the active edges meeting v (uv itself excluded) number at
    least r after round i-1.  Matches the vertex process on the line
    graph round for round.
    """
    _check_r(r)
    seed_set = _check_edge_seed(g, seed)
    state = {e: _INACTIVE for e in g.edges}
    vcount = [0] * g.vertex_count
    for u, v in seed_set:
        state[(u, v)] = _ACTIVE
        vcount[u] += 1
        vcount[v] += 1
    frontier: list[Edge] = []
    for e in g.edge_list():
        u, v = e
        if state[e] == _INACTIVE and vcount[u] + vcount[v] >= r:
            state[e] = _SCHEDULED
            frontier.append(e)
    rounds: list[frozenset] = []
    while frontier:
        rounds.append(frozenset(frontier))
        touched: set[int] = set()
        for e in frontier:
            state[e] = _ACTIVE
        for u, v in frontier:
            vcount[u] += 1
            vcount[v] += 1
            touched.add(u)
            touched.add(v)
        next_frontier: list[Edge] = []
        # only edges at a touched endpoint can have newly met the rule
        for x in sorted(touched):
            for w in g.adjacency[x]:
                e2 = normalize_edge(x, w)
                if state[e2] == _INACTIVE and vcount[x] + vcount[w] >= r:
                    state[e2] = _SCHEDULED
                    next_frontier.append(e2)
        frontier = next_frontier
    final = seed_set.union(*rounds) if rounds else seed_set
    return ActivationTrace(seed_set, tuple(rounds), final)


def is_percolating_edges_line(g: Graph, r: int, seed: Iterable[tuple[int, int]]) -> bool:
    return percolate_edges_linegraph(g, r, seed).final == g.edges


# ---------------------------------------------------------------------------
# seed files and trace serialization

def seed_to_text(vertices: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()) -> str:
    """Serialize a seed: one "v <i>" or "e <u> <v>" line per element, sorted."""
    lines = [f"v {v}" for v in sorted(set(vertices))]
    lines += [f"e {u} {v}" for u, v in sorted({normalize_edge(u, v) for u, v in edges})]
    return "\n".join(lines) + ("\n" if lines else "")


def seed_from_text(text: str) -> tuple[frozenset[int], frozenset[Edge]]:
    """Parse a seed file into (vertex set, edge set)."""
    vertices: set[int] = set()
    edges: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "v" and len(parts) == 2:
            vertices.add(int(parts[1]))
        elif parts[0] == "e" and len(parts) == 3:
            edges.add(normalize_edge(int(parts[1]), int(parts[2])))
        else:
            raise FormatError(f"line {lineno}: expected 'v <i>' or 'e <u> <v>'")
    return frozenset(vertices), frozenset(edges)


def _jsonable_element(x) -> object:
    return list(x) if isinstance(x, tuple) else x


def _jsonable_set(s: frozenset) -> list:
    return [_jsonable_element(x) for x in sorted(s)]


def trace_to_jsonable(trace: ActivationTrace, percolated: bool) -> dict:
    """Trace as a JSON-ready dict: seed, rounds, final, percolated."""
    return {
        "seed": _jsonable_set(trace.seed),
        "rounds": [_jsonable_set(rd) for rd in trace.rounds],
        "final": _jsonable_set(trace.final),
        "percolated": percolated,
    }
