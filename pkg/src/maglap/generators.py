"""Seeded random graphs, potentials and gauges for randomized verification."""
from __future__ import annotations

import numpy as np

from .graph import Graph, from_edge_list
from .magnetic import TWO_PI, Gauge, MagneticPotential


def random_tree(rng: np.random.Generator, n: int) -> Graph:
    """Uniform labelled tree on ``n`` vertices (Pruefer decoding)."""
    if n == 1:
        return Graph(1, ())
    if n == 2:
        return from_edge_list(2, [(0, 1)])
    seq = rng.integers(0, n, size=n - 2).tolist()
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [w for w in range(n) if degree[w] == 1]
    edges.append((u, v))
    order = rng.permutation(len(edges))
    return from_edge_list(n, [edges[i] for i in order])


def _add_random_edges(rng, n, edges, p):
    have = {(min(u, v), max(u, v)) for u, v in edges}
    extra = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in have and rng.random() < p]
    return list(edges) + extra


def random_connected_graph(rng: np.random.Generator, n: int, p: float | None = None) -> Graph:
    """Random spanning tree plus each remaining pair independently with probability ``p``."""
    if p is None:
        p = float(rng.uniform(0.05, 0.6))
    tree = random_tree(rng, n)
    edges = _add_random_edges(rng, n, tree.edges, p)
    order = rng.permutation(len(edges))
    return from_edge_list(n, [edges[i] for i in order])


def random_graph(rng: np.random.Generator, n: int, p: float | None = None) -> Graph:
    """Erdos-Renyi G(n, p); may be disconnected."""
    if p is None:
        p = float(rng.uniform(0.1, 0.8))
    return from_edge_list(n, _add_random_edges(rng, n, [], p))


def planted_hamiltonian_graph(rng: np.random.Generator, n: int, p: float | None = None):
    """Graph containing a random Hamiltonian cycle; returns ``(graph, cycle)``."""
    if p is None:
        p = float(rng.uniform(0.0, 0.5))
    cycle = rng.permutation(n).tolist()
    edges = [(cycle[i], cycle[(i + 1) % n]) for i in range(n)]
    edges = _add_random_edges(rng, n, edges, p)
    return from_edge_list(n, edges), cycle


def random_potential(rng: np.random.Generator, m: int) -> MagneticPotential:
    return MagneticPotential(tuple(rng.uniform(0.0, TWO_PI, size=m).tolist()))


def random_gauge(rng: np.random.Generator, n: int) -> Gauge:
    return Gauge(tuple(rng.uniform(0.0, TWO_PI, size=n).tolist()))
