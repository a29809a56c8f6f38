import itertools
import math
from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

from maglap.graph import Graph, from_edge_list
from maglap.magnetic import MagneticPotential

FIXTURES = Path(__file__).parent / "fixtures"

SQUARE_PENDANTS_EDGES = [(0, 4), (4, 5), (1, 2), (1, 3), (2, 4), (3, 4)]
HEXAGON_CHORDS_EDGES = [(0, 2), (0, 5), (1, 2), (1, 3), (1, 4), (2, 5), (3, 5), (4, 5)]


@pytest.fixture
def square_pendants():
    return from_edge_list(6, SQUARE_PENDANTS_EDGES)


@pytest.fixture
def hexagon_chords():
    return from_edge_list(6, HEXAGON_CHORDS_EDGES)


@pytest.fixture
def k2():
    return from_edge_list(2, [(0, 1)])


@pytest.fixture
def k4():
    return from_edge_list(4, list(itertools.combinations(range(4), 2)))


def pi_on_edge(G, edge):
    vals = [0.0] * G.m
    vals[G.find_edge(*edge)] = math.pi
    return MagneticPotential(tuple(vals))


# --- independent oracles -------------------------------------------------


def dml_by_action(G: Graph, potential) -> np.ndarray:
    """Matrix of the operator phi -> sum over arcs leaving v of phi(v) - e^{i a} phi(head).

    Built column by column from basis vectors, independently of maglap.dml.
    """
    alpha = list(potential.values) if potential is not None else [0.0] * G.m
    arcs = []
    for (u, v), a in zip(G.edges, alpha):
        arcs.append((u, v, a))
        arcs.append((v, u, -a))
    H = np.zeros((G.n, G.n), dtype=complex)
    for j in range(G.n):
        phi = np.zeros(G.n, dtype=complex)
        phi[j] = 1.0
        out = np.zeros(G.n, dtype=complex)
        for tail, head, a in arcs:
            out[tail] += phi[tail] - np.exp(1j * a) * phi[head]
        H[:, j] = out
    return H


def brute_force_matching_number(G: Graph) -> int:
    """Exhaustive recursion: the lowest free vertex is unmatched or paired with a free neighbour."""
    adj = [set() for _ in range(G.n)]
    for u, v in G.edges:
        adj[u].add(v)
        adj[v].add(u)

    def best(free: frozenset) -> int:
        if not free:
            return 0
        v = min(free)
        rest = free - {v}
        out = best(rest)
        for w in adj[v] & rest:
            out = max(out, 1 + best(rest - {w}))
        return out

    return best(frozenset(range(G.n)))


def brute_force_hamiltonian(G: Graph) -> bool:
    if G.n < 3:
        return False
    for perm in itertools.permutations(range(1, G.n)):
        cyc = (0,) + perm
        if all(G.has_edge(cyc[i], cyc[(i + 1) % G.n]) for i in range(G.n)):
            return True
    return False


# --- hypothesis strategies -----------------------------------------------

angles = st.floats(min_value=0.0, max_value=2 * math.pi, allow_nan=False, exclude_max=True)


@st.composite
def graphs(draw, min_n=1, max_n=9, connected=True, tree=False):
    n = draw(st.integers(min_n, max_n))
    edges = set()
    if connected or tree:
        for v in range(1, n):
            edges.add((draw(st.integers(0, v - 1)), v))
    if not tree:
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
        if pairs:
            mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
            edges.update(p for p, keep in zip(pairs, mask) if keep)
    perm = draw(st.permutations(range(n)))
    return from_edge_list(n, sorted((perm[u], perm[v]) for u, v in edges))


@st.composite
def magnetic_graphs(draw, **kw):
    G = draw(graphs(**kw))
    vals = draw(st.lists(angles, min_size=G.m, max_size=G.m))
    return G, MagneticPotential(tuple(vals))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for i in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[i])
