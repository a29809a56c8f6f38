"""Finite simple graphs with a fixed reference orientation per edge.

Every edge is stored as ``(u, v)`` with ``u < v``; that pair order is the
reference orientation against which potentials are measured.
"""
from __future__ import annotations

import operator
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    BadEdgeId,
    Disconnected,
    DuplicateEdge,
    GraphError,
    LoopEdge,
    NotAChord,
    NotAMatching,
    VertexOutOfRange,
)

__all__ = [
    "Graph",
    "SignedWalk",
    "SpanningTreeDecomposition",
    "from_edge_list",
    "is_connected",
    "components",
    "delete_edge",
    "delete_edges",
    "spanning_tree",
    "spanning_tree_containing_matching",
    "fundamental_cycle",
]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise GraphError(f"vertex count must be >= 1, got {self.n}")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{self.n - 1}")
            if u > v:
                raise GraphError(f"edge ({u}, {v}) is not canonical; use from_edge_list")
            if (u, v) in seen:
                raise DuplicateEdge(f"edge ({u}, {v}) appears twice")
            seen.add((u, v))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Vertex -> indices of incident edges, ascending."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        """Vertex -> adjacent vertices, ascending."""
        return tuple(
            tuple(sorted(self.other_end(e, v) for e in self.incidence[v])) for v in range(self.n)
        )

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    @property
    def degrees(self) -> list[int]:
        return [len(x) for x in self.incidence]

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    def other_end(self, e: int, v: int) -> int:
        u, w = self.edges[e]
        return w if v == u else u

    def find_edge(self, u: int, v: int) -> int | None:
        return self.edge_index.get((min(u, v), max(u, v)))

    def has_edge(self, u: int, v: int) -> bool:
        return self.find_edge(u, v) is not None

    def check_edge(self, e: int) -> int:
        try:
            i = operator.index(e)
        except TypeError:
            raise BadEdgeId(f"edge id {e!r} is not an integer") from None
        if not 0 <= i < self.m:
            raise BadEdgeId(f"edge id {e!r} not in 0..{self.m - 1}")
        return i


def from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on ``n`` vertices, canonicalising each pair to ``(min, max)``.

    Edge order is preserved.
    """
    edges = []
    for pair in pairs:
        u, v = (int(x) for x in pair)
        edges.append((min(u, v), max(u, v)) if u != v else (u, v))
    return Graph(int(n), tuple(edges))


def components(G: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    label = [-1] * G.n
    out = []
    for s in range(G.n):
        if label[s] >= 0:
            continue
        label[s] = len(out)
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in G.neighbors[v]:
                if label[w] < 0:
                    label[w] = label[s]
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def is_connected(G: Graph) -> bool:
    return len(components(G)) == 1


def delete_edges(G: Graph, edge_ids: Iterable[int]) -> Graph:
    drop = set()
    for e in edge_ids:
        drop.add(G.check_edge(e))
    return Graph(G.n, tuple(edge for i, edge in enumerate(G.edges) if i not in drop))


def delete_edge(G: Graph, e: int) -> Graph:
    """Remove edge ``e``; the remaining edges keep their relative order."""
    return delete_edges(G, [e])


@dataclass(frozen=True)
class SignedWalk:
    """A walk given as its vertex sequence plus signed edge traversals.

    ``arcs[i] = (edge, sign)`` moves from ``vertices[i]`` to ``vertices[i+1]``;
    sign is +1 along the reference orientation and -1 against it.
    """

    vertices: tuple[int, ...]
    arcs: tuple[tuple[int, int], ...]

    @property
    def is_closed(self) -> bool:
        return len(self.arcs) > 0 and self.vertices[0] == self.vertices[-1]

    def edge_ids(self) -> list[int]:
        return [e for e, _ in self.arcs]

    def reversed(self) -> SignedWalk:
        return SignedWalk(self.vertices[::-1], tuple((e, -s) for e, s in reversed(self.arcs)))

    def is_consistent_with(self, G: Graph) -> bool:
        if len(self.vertices) != len(self.arcs) + 1:
            return False
        for (e, s), a, b in zip(self.arcs, self.vertices, self.vertices[1:]):
            if not 0 <= e < G.m or s not in (1, -1):
                return False
            tail, head = G.edges[e] if s == 1 else G.edges[e][::-1]
            if (tail, head) != (a, b):
                return False
        return True


def walk_from_vertices(G: Graph, vertices: Sequence[int]) -> SignedWalk:
    """Signed walk following consecutive vertices; they must be adjacent."""
    arcs = []
    for a, b in zip(vertices, vertices[1:]):
        e = G.find_edge(a, b)
        if e is None:
            raise GraphError(f"vertices {a} and {b} are not adjacent")
        arcs.append((e, 1 if a < b else -1))
    return SignedWalk(tuple(vertices), tuple(arcs))


@dataclass(frozen=True)
class SpanningTreeDecomposition:
    graph: Graph
    root: int
    parent: tuple[int, ...]  # -1 at the root
    parent_edge: tuple[int, ...]  # -1 at the root
    depth: tuple[int, ...]
    tree_edges: frozenset[int]
    chords: tuple[int, ...]

    def tree_path(self, a: int, b: int) -> list[int]:
        """Vertex sequence of the unique tree path from ``a`` to ``b``."""
        up_a, up_b = [a], [b]
        while self.depth[up_a[-1]] > self.depth[up_b[-1]]:
            up_a.append(self.parent[up_a[-1]])
        while self.depth[up_b[-1]] > self.depth[up_a[-1]]:
            up_b.append(self.parent[up_b[-1]])
        while up_a[-1] != up_b[-1]:
            up_a.append(self.parent[up_a[-1]])
            up_b.append(self.parent[up_b[-1]])
        return up_a + up_b[-2::-1]

    @cached_property
    def fundamental_cycles(self) -> dict[int, SignedWalk]:
        return {c: fundamental_cycle(self, c) for c in self.chords}


def _decompose(G: Graph, tree_ids: set[int], root: int = 0) -> SpanningTreeDecomposition:
    parent = [-1] * G.n
    parent_edge = [-1] * G.n
    depth = [0] * G.n
    seen = [False] * G.n
    seen[root] = True
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for e in G.incidence[v]:
            if e not in tree_ids:
                continue
            w = G.other_end(e, v)
            if not seen[w]:
                seen[w] = True
                parent[w], parent_edge[w], depth[w] = v, e, depth[v] + 1
                queue.append(w)
    chords = tuple(e for e in range(G.m) if e not in tree_ids)
    return SpanningTreeDecomposition(
        G, root, tuple(parent), tuple(parent_edge), tuple(depth), frozenset(tree_ids), chords
    )


def spanning_tree(G: Graph) -> SpanningTreeDecomposition:
    """BFS spanning tree from vertex 0, neighbours visited in ascending order."""
    if not is_connected(G):
        raise Disconnected("spanning tree requires a connected graph")
    seen = [False] * G.n
    seen[0] = True
    tree: set[int] = set()
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in G.neighbors[v]:
            if not seen[w]:
                seen[w] = True
                tree.add(G.find_edge(v, w))
                queue.append(w)
    return _decompose(G, tree)


def check_matching(G: Graph, M: Iterable[int]) -> frozenset[int]:
    M = frozenset(G.check_edge(e) for e in M)
    covered: set[int] = set()
    for e in M:
        u, v = G.edges[e]
        if u in covered or v in covered:
            raise NotAMatching(f"edge {e} shares a vertex with another matching edge")
        covered.update((u, v))
    return M


def spanning_tree_containing_matching(G: Graph, M: Iterable[int]) -> SpanningTreeDecomposition:
    """Spanning tree whose edge set contains the matching ``M``.

    Matching edges go in first, then the remaining edges in index order
    (Kruskal with unit weights).
    """
    M = check_matching(G, M)
    if not is_connected(G):
        raise Disconnected("spanning tree requires a connected graph")
    root = list(range(G.n))

    def find(x):
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    tree: set[int] = set()
    for e in sorted(M) + [e for e in range(G.m) if e not in M]:
        a, b = (find(x) for x in G.edges[e])
        if a != b:
            root[a] = b
            tree.add(e)
    return _decompose(G, tree)


def fundamental_cycle(D: SpanningTreeDecomposition, chord: int) -> SignedWalk:
    """Closed walk: the chord along its reference orientation, then the tree path back."""
    if chord not in D.chords:
        raise NotAChord(f"edge {chord} is not a chord of this spanning tree")
    u, v = D.graph.edges[chord]
    return walk_from_vertices(D.graph, [u] + D.tree_path(v, u))
