"""Simple undirected weighted graphs plus the structural queries the solvers need.

Vertex ids are stable opaque integers: reductions never renumber, so sets
computed on a reduced graph are directly sets of the original graph. Edge
weights are non-negative integers (weight 0 is legal). Infinite girth is
reported as ``math.inf`` rather than a sentinel integer.
"""

from __future__ import annotations

import heapq
import math
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import MemberNotInGraph, PreconditionViolated

INFINITE = math.inf

EdgeKey = tuple[int, int]


def edge_key(u: int, v: int) -> EdgeKey:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph with integer edge weights (default 1)."""

    __slots__ = ("_adj", "_weights", "_n", "_m")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[tuple] = ()):
        adj: dict[int, list[int]] = {int(v): [] for v in vertices}
        weights: dict[EdgeKey, int] = {}
        for e in edges:
            if len(e) == 2:
                u, v = e
                w = 1
            else:
                u, v, w = e
            u, v, w = int(u), int(v), int(w)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if w < 0:
                raise ValueError(f"negative weight on edge ({u}, {v})")
            k = edge_key(u, v)
            if k in weights:
                raise ValueError(f"parallel edge ({u}, {v})")
            weights[k] = w
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        self._adj = {v: tuple(sorted(ns)) for v, ns in sorted(adj.items())}
        self._weights = weights
        self._n = len(self._adj)
        self._m = len(weights)

    # -- basic accessors ---------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(self._adj)

    def edges(self) -> list[EdgeKey]:
        return sorted(self._weights)

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self._weights

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max((len(ns) for ns in self._adj.values()), default=0)

    def weight(self, u: int, v: int) -> int:
        return self._weights[edge_key(u, v)]

    def edge_weights(self) -> dict[EdgeKey, int]:
        return dict(self._weights)

    def total_weight(self) -> int:
        return sum(self._weights.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj and self._weights == other._weights

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self._m})"

    # -- derived graphs ----------------------------------------------------

    def _edge_items(self) -> Iterator[tuple[int, int, int]]:
        for (u, v), w in self._weights.items():
            yield u, v, w

    def subgraph(self, keep: Iterable[int]) -> "Graph":
        keep_set = set(keep)
        missing = keep_set - self._adj.keys()
        if missing:
            raise MemberNotInGraph(f"vertices {sorted(missing)} not in graph")
        edges = [(u, v, w) for u, v, w in self._edge_items()
                 if u in keep_set and v in keep_set]
        return Graph(keep_set, edges)

    def without_vertices(self, drop: Iterable[int]) -> "Graph":
        drop_set = set(drop)
        return self.subgraph(self._adj.keys() - drop_set)

    def without_edges(self, drop: Iterable[EdgeKey]) -> "Graph":
        drop_set = {edge_key(*e) for e in drop}
        edges = [(u, v, w) for u, v, w in self._edge_items()
                 if (u, v) not in drop_set]
        return Graph(self._adj.keys(), edges)

    def with_edges(self, add: Iterable[tuple]) -> "Graph":
        edges = list(self._edge_items())
        edges.extend(add)
        return Graph(self._adj.keys(), edges)

    def rewired(self, drop_vertices: Iterable[int] = (),
                add_edges: Iterable[tuple] = ()) -> "Graph":
        """Remove vertices, then add edges among the survivors."""
        drop_set = set(drop_vertices)
        edges = [(u, v, w) for u, v, w in self._edge_items()
                 if u not in drop_set and v not in drop_set]
        edges.extend(add_edges)
        return Graph(self._adj.keys() - drop_set, edges)


# -- forests and feedback vertex sets --------------------------------------


def is_forest(g: Graph) -> bool:
    """True iff the graph contains no cycle."""
    # Union-find beats DFS bookkeeping here and has no parent-edge subtlety.
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        root = x
        while parent.get(root, root) != root:
            root = parent[root]
        while parent.get(x, x) != x:
            parent[x], x = root, parent[x]
        return root

    for u, v in g.edges():
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def validate_fvs(g: Graph, s: Iterable[int]) -> bool:
    """True iff removing ``s`` leaves a forest. Raises if ``s`` ⊄ V(G)."""
    s_set = set(s)
    missing = s_set - set(g.vertices)
    if missing:
        raise MemberNotInGraph(f"vertices {sorted(missing)} not in graph")
    return is_forest(g.without_vertices(s_set))


# -- cycles and girth -------------------------------------------------------


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle; ``INFINITE`` for forests.

    Per-vertex BFS: every non-tree edge scanned closes a walk whose length
    bounds the girth from above, and a BFS from a vertex of a shortest cycle
    attains it.
    """
    best = INFINITE
    for root in g.vertices:
        dist = {root: 0}
        frontier = [root]
        parent = {root: -1}
        while frontier:
            nxt = []
            for v in frontier:
                dv = dist[v]
                if 2 * dv >= best - 1:
                    continue
                for u in g.neighbors(v):
                    if u not in dist:
                        dist[u] = dv + 1
                        parent[u] = v
                        nxt.append(u)
                    elif parent[v] != u and parent[u] != v:
                        cand = dv + dist[u] + 1
                        if cand < best:
                            best = cand
            frontier = nxt
    return best


def weighted_girth(g: Graph) -> int | float:
    """Minimum total edge weight over all cycles; ``INFINITE`` for forests.

    Exact even with zero-weight edges: for each edge, Dijkstra around it.
    """
    best = INFINITE
    for u, v in g.edges():
        w_uv = g.weight(u, v)
        if w_uv >= best:
            continue  # detours are non-negative, cannot beat best
        around = _dijkstra_avoiding(g, u, v, best - w_uv)
        if around is not None and around + w_uv < best:
            best = around + w_uv
    return best


def _dijkstra_avoiding(g: Graph, source: int, target: int,
                       cutoff: int | float) -> int | None:
    """Shortest path weight from source to target avoiding the edge (source, target)."""
    dist = {source: 0}
    heap = [(0, source)]
    while heap:
        d, v = heapq.heappop(heap)
        if d > dist.get(v, INFINITE):
            continue
        if v == target:
            return d
        for u in g.neighbors(v):
            if v == source and u == target:
                continue
            nd = d + g.weight(v, u)
            if nd >= cutoff:
                continue
            if nd < dist.get(u, INFINITE):
                dist[u] = nd
                heapq.heappush(heap, (nd, u))
    return None


def shortest_cycle(g: Graph) -> list[int] | None:
    """Vertices of one shortest cycle, or None for a forest.

    Deterministic: scans BFS roots in ascending id order and keeps the first
    cycle of the best length.
    """
    best_len = INFINITE
    best: list[int] | None = None
    for root in g.vertices:
        dist = {root: 0}
        parent = {root: -1}
        frontier = [root]
        while frontier:
            nxt = []
            for v in frontier:
                dv = dist[v]
                if 2 * dv >= best_len - 1:
                    continue
                for u in g.neighbors(v):
                    if u not in dist:
                        dist[u] = dv + 1
                        parent[u] = v
                        nxt.append(u)
                    elif parent[v] != u and parent[u] != v:
                        cand = dv + dist[u] + 1
                        if cand < best_len:
                            cycle = _walk_cycle(parent, v, u)
                            if cycle is not None and len(cycle) < best_len:
                                best_len = len(cycle)
                                best = cycle
            frontier = nxt
    return best


def _walk_cycle(parent: dict[int, int], v: int, u: int) -> list[int] | None:
    """Close the BFS-tree paths of v and u into a simple cycle, if they form one."""
    path_v, path_u = [v], [u]
    x = v
    while parent[x] != -1:
        x = parent[x]
        path_v.append(x)
    x = u
    while parent[x] != -1:
        x = parent[x]
        path_u.append(x)
    set_v = set(path_v)
    # Lowest common ancestor: first vertex of u's path already on v's path.
    lca_idx = next(i for i, x in enumerate(path_u) if x in set_v)
    lca = path_u[lca_idx]
    cycle = path_v[:path_v.index(lca) + 1] + path_u[:lca_idx][::-1]
    if len(cycle) != len(set(cycle)):
        return None
    return cycle


# -- connectivity ------------------------------------------------------------


def connected_components(g: Graph) -> list[set[int]]:
    """Components ordered by their smallest vertex id."""
    seen: set[int] = set()
    comps = []
    for root in g.vertices:
        if root in seen:
            continue
        comp = {root}
        stack = [root]
        seen.add(root)
        while stack:
            v = stack.pop()
            for u in g.neighbors(v):
                if u not in seen:
                    seen.add(u)
                    comp.add(u)
                    stack.append(u)
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def cut_vertices(g: Graph) -> list[int]:
    """All articulation points, ascending. Iterative Hopcroft-Tarjan."""
    visited: set[int] = set()
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    cuts: set[int] = set()
    timer = 0
    for root in g.vertices:
        if root in visited:
            continue
        root_children = 0
        stack: list[tuple[int, int, Iterator[int]]] = [(root, -1, iter(g.neighbors(root)))]
        visited.add(root)
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if u == parent:
                    continue
                if u in visited:
                    if disc[u] < low[v]:
                        low[v] = disc[u]
                else:
                    visited.add(u)
                    disc[u] = low[u] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((u, v, iter(g.neighbors(u))))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                if stack:
                    pv = stack[-1][0]
                    if low[v] < low[pv]:
                        low[pv] = low[v]
                    if pv != root and low[v] >= disc[pv]:
                        cuts.add(pv)
        if root_children >= 2:
            cuts.add(root)
    return sorted(cuts)


def bridges(g: Graph) -> list[EdgeKey]:
    """All cut edges, sorted."""
    visited: set[int] = set()
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    out: list[EdgeKey] = []
    timer = 0
    for root in g.vertices:
        if root in visited:
            continue
        stack: list[tuple[int, int, Iterator[int]]] = [(root, -1, iter(g.neighbors(root)))]
        visited.add(root)
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if u == parent:
                    # Simple graph: the only v-parent edge is the tree edge.
                    continue
                if u in visited:
                    if disc[u] < low[v]:
                        low[v] = disc[u]
                else:
                    visited.add(u)
                    disc[u] = low[u] = timer
                    timer += 1
                    stack.append((u, v, iter(g.neighbors(u))))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                if stack:
                    pv = stack[-1][0]
                    if low[v] < low[pv]:
                        low[pv] = low[v]
                    if low[v] > disc[pv]:
                        out.append(edge_key(pv, v))
        # root done
    return sorted(out)


def is_two_connected(g: Graph) -> bool:
    """2-connected per the convention |V| > 2, connected, no cut vertex."""
    return g.n >= 3 and is_connected(g) and not cut_vertices(g)


def has_two_edge_cut(g: Graph) -> bool:
    """True iff a connected bridgeless graph has a 2-edge cut-set.

    DFS covering structure: a tree edge covered by exactly one back edge forms
    a cut with it; two tree edges form a cut iff covered by the same back-edge
    set, detected by per-edge XOR signatures and confirmed by an explicit
    disconnection check (signature equality is necessary, so no cut is missed).
    """
    if g.n < 2:
        return False
    root = g.vertices[0]
    disc: dict[int, int] = {root: 0}
    parent: dict[int, int] = {root: -1}
    postorder: list[int] = []
    rng = random.Random(0x5EED)
    acc_xor = {v: 0 for v in g.vertices}
    acc_cnt = {v: 0 for v in g.vertices}
    timer = 1
    stack: list[tuple[int, Iterator[int]]] = [(root, iter(g.neighbors(root)))]
    while stack:
        v, it = stack[-1]
        advanced = False
        for u in it:
            if u == parent[v]:
                continue
            if u in disc:
                if disc[u] < disc[v]:
                    # Back edge to an ancestor (a DFS of an undirected graph
                    # produces no cross edges): stamp descendant and ancestor.
                    tag = rng.getrandbits(64)
                    acc_xor[v] ^= tag
                    acc_xor[u] ^= tag
                    acc_cnt[v] += 1
                    acc_cnt[u] -= 1
                continue
            disc[u] = timer
            timer += 1
            parent[u] = v
            stack.append((u, iter(g.neighbors(u))))
            advanced = True
            break
        if not advanced:
            stack.pop()
            postorder.append(v)
    if len(disc) != g.n:
        raise PreconditionViolated("graph must be connected")
    # Children precede parents in postorder; afterwards acc_*[v] describes the
    # back edges covering the tree edge (parent[v], v).
    for v in postorder:
        p = parent[v]
        if p != -1:
            acc_xor[p] ^= acc_xor[v]
            acc_cnt[p] += acc_cnt[v]
    groups: dict[int, list[int]] = {}
    for v in disc:
        if v == root:
            continue
        cnt = acc_cnt[v]
        if cnt == 0:
            raise PreconditionViolated("graph must be 2-edge-connected (bridge found)")
        if cnt == 1:
            return True
        groups.setdefault(acc_xor[v], []).append(v)
    for sig, members in groups.items():
        for a, b in combinations(members, 2):
            e1 = edge_key(parent[a], a)
            e2 = edge_key(parent[b], b)
            if not is_connected(g.without_edges([e1, e2])):
                return True
    return False


@dataclass(frozen=True)
class CutStructure:
    """A small cut with the two vertex sets it separates."""

    kind: str  # "vertex-cut" | "edge-cut"
    members: frozenset
    sides: tuple[frozenset[int], frozenset[int]]


def min_side_two_edge_cut(g: Graph) -> CutStructure | None:
    """The 2-edge cut-set whose smaller side is minimum; None if 3-edge-connected.

    Ties broken by the lexicographically smallest sorted smaller side. The
    graph must be 2-edge-connected.
    """
    if not is_connected(g) or bridges(g):
        raise PreconditionViolated("graph must be 2-edge-connected")
    if not has_two_edge_cut(g):
        return None
    best: tuple[int, tuple[int, ...], tuple[EdgeKey, EdgeKey]] | None = None
    best_sides: tuple[frozenset[int], frozenset[int]] | None = None
    seen_pairs: set[frozenset[EdgeKey]] = set()
    for e in g.edges():
        reduced = g.without_edges([e])
        for f in bridges(reduced):
            pair = frozenset((e, f))
            if pair in seen_pairs:
                continue
            seen_pairs.add(pair)
            comps = connected_components(g.without_edges([e, f]))
            if len(comps) != 2:
                continue
            c1, c2 = comps
            if (len(c1), tuple(sorted(c1))) > (len(c2), tuple(sorted(c2))):
                c1, c2 = c2, c1
            key = (len(c1), tuple(sorted(c1)), tuple(sorted(pair)))
            if best is None or key < best:
                best = key
                best_sides = (frozenset(c1), frozenset(c2))
    assert best is not None and best_sides is not None
    return CutStructure(kind="edge-cut", members=frozenset(best[2]),
                        sides=best_sides)


def connectivity_le3(g: Graph) -> tuple[int, int]:
    """(vertex connectivity, edge connectivity), each capped at 3.

    A value of 3 means "at least 3"; smaller values are exact.
    """
    return _vertex_connectivity_le3(g), _edge_connectivity_le3(g)


def _vertex_connectivity_le3(g: Graph) -> int:
    if g.n <= 1 or not is_connected(g):
        return 0
    # k-connectivity additionally requires |V| > k.
    cap = min(3, g.n - 1)
    if cap >= 1 and cut_vertices(g):
        return 1
    if cap >= 2:
        for pair in combinations(g.vertices, 2):
            rest = g.without_vertices(pair)
            if rest.n > 0 and not is_connected(rest):
                return 2
    return cap


def _edge_connectivity_le3(g: Graph) -> int:
    if g.n <= 1 or not is_connected(g):
        return 0
    if bridges(g):
        return 1
    if g.m >= 2 and has_two_edge_cut(g):
        return 2
    if g.m < 2:
        return 1 if g.m == 1 else 0
    return 3
