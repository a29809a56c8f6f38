"""Exact combinatorial oracles: maximum matching and Hamiltonian cycles.

These are ground truth for the spectral certificates, so both favour
exactness over speed.
"""
from __future__ import annotations

from .errors import TooLarge
from .graph import Graph, components

N_EXACT = 20
HAMILTON_NODE_BUDGET = 2_000_000


def _greedy_matching(adj: dict[int, set[int]]) -> list[tuple[int, int]]:
    """Maximal matching, low-degree vertices first."""
    taken: set[int] = set()
    out = []
    for v in sorted(adj, key=lambda x: (len(adj[x]), x)):
        if v in taken:
            continue
        for u in sorted(adj[v], key=lambda x: (len(adj[x]), x)):
            if u not in taken:
                taken.update((u, v))
                out.append((min(u, v), max(u, v)))
                break
    return out


def _max_matching_component(adj: dict[int, set[int]]) -> list[tuple[int, int]]:
    best = _greedy_matching(adj)
    cap = len(adj) // 2

    def prune(active: dict[int, set[int]]) -> dict[int, set[int]]:
        return {v: nb for v, nb in active.items() if nb}

    def without(active, drop):
        return prune({v: nb - drop for v, nb in active.items() if v not in drop})

    def search(active: dict[int, set[int]], chosen: list[tuple[int, int]]):
        nonlocal best
        if len(best) == cap:
            return
        greedy = _greedy_matching(active)
        if len(chosen) + len(greedy) > len(best):
            best = chosen + greedy
        # a maximal matching M' gives a vertex cover of size 2|M'|
        upper = min(len(active) // 2, 2 * len(greedy))
        if len(chosen) + upper <= len(best) or not active:
            return
        v = min(active, key=lambda x: (len(active[x]), x))
        for u in sorted(active[v]):
            search(without(active, {u, v}), chosen + [(min(u, v), max(u, v))])
        # a degree-1 vertex is always matched in some maximum matching
        if len(active[v]) > 1:
            search(without(active, {v}), chosen)

    search(prune(adj), [])
    return best


def maximum_matching(G: Graph) -> frozenset[int]:
    """Edge ids of a maximum-cardinality matching (branch and bound per component)."""
    result: list[int] = []
    for comp in components(G):
        if len(comp) < 2:
            continue
        adj = {v: set(G.neighbors[v]) for v in comp}
        for u, v in _max_matching_component(adj):
            result.append(G.find_edge(u, v))
    return frozenset(result)


def matching_number(G: Graph) -> int:
    return len(maximum_matching(G))


def is_matchable(G: Graph) -> bool:
    return G.n % 2 == 0 and 2 * matching_number(G) == G.n


def is_hamiltonian_cycle(G: Graph, cycle) -> bool:
    cycle = list(cycle)
    if len(cycle) != G.n or sorted(cycle) != list(range(G.n)) or G.n < 3:
        return False
    return all(G.has_edge(cycle[i], cycle[(i + 1) % G.n]) for i in range(G.n))


def find_hamiltonian_cycle(G: Graph, n_exact: int = N_EXACT, budget: int = HAMILTON_NODE_BUDGET):
    """A Hamiltonian cycle as a vertex list starting at 0, or None if there is none.

    For ``n <= n_exact`` the search is exhaustive, so None is a proof of
    non-Hamiltonicity. Larger graphs get ``budget`` search nodes; running out
    raises TooLarge rather than reporting a possibly false None.
    """
    n = G.n
    if n < 3 or min(G.degrees) < 2 or len(components(G)) > 1:
        return None
    nbrs = [set(x) for x in G.neighbors]
    visited = [False] * n
    visited[0] = True
    path = [0]
    nodes = 0

    def viable(head: int) -> tuple[bool, int | None]:
        """Necessary conditions for extending ``path``; also a forced next vertex."""
        unvisited = [w for w in range(n) if not visited[w]]
        forced = None
        for w in unvisited:
            avail = [x for x in nbrs[w] if not visited[x] or x == head or x == 0]
            if len(avail) < 2:
                return False, None
            # head has one free cycle edge left, except at the start where it is 0
            if len(avail) == 2 and head in avail and len(unvisited) > 1 and len(path) > 1:
                if forced is not None:
                    return False, None
                forced = w
        # unvisited vertices must be reachable from head without crossing the path
        seen = {head}
        stack = [head]
        while stack:
            x = stack.pop()
            for y in nbrs[x]:
                if not visited[y] and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) - 1 != len(unvisited):
            return False, None
        return True, forced

    def extend(head: int) -> bool:
        nonlocal nodes
        nodes += 1
        if n > n_exact and nodes > budget:
            raise TooLarge(f"Hamiltonian search exceeded {budget} nodes on n={n}")
        if len(path) == n:
            return 0 in nbrs[head]
        ok, forced = viable(head)
        if not ok:
            return False
        candidates = [forced] if forced is not None else sorted(nbrs[head])
        for w in candidates:
            if visited[w]:
                continue
            visited[w] = True
            path.append(w)
            if extend(w):
                return True
            path.pop()
            visited[w] = False
        return False

    return list(path) if extend(0) else None


def is_hamiltonian(G: Graph, n_exact: int = N_EXACT) -> bool:
    return find_hamiltonian_cycle(G, n_exact) is not None
