"""Combinatorial plane embeddings: rotation systems, faces, and surgeries.

A rotation system stores, for every vertex, its incident neighbors in
clockwise order. Faces are recovered by the usual traversal rule (after
arriving at ``v`` from ``u``, leave along the successor of ``u`` in ``v``'s
rotation); the rotation encodes a plane embedding exactly when the number of
face walks matches Euler's formula, which ``faces_of`` enforces.

Face recomputation after every surgery is done from scratch rather than
incrementally: instances are modest and re-traversal keeps the Euler check
honest.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import networkx as nx

from .errors import (
    InternalInvariantBroken,
    InvalidMerger,
    InvalidRotation,
    NonPlanarRotation,
    PreconditionViolated,
    WouldCreateParallelEdge,
)
from .graph import (
    EdgeKey,
    Graph,
    connected_components,
    edge_key,
    is_two_connected,
)


@dataclass(frozen=True)
class RotationSystem:
    """Per-vertex clockwise cyclic order of neighbors."""

    order: dict[int, tuple[int, ...]]

    def successor(self, v: int, u: int) -> int:
        ring = self.order[v]
        return ring[(ring.index(u) + 1) % len(ring)]

    def validate_for(self, g: Graph) -> None:
        if set(self.order) != set(g.vertices):
            raise InvalidRotation("rotation vertices differ from graph vertices")
        for v, ring in self.order.items():
            if sorted(ring) != sorted(g.neighbors(v)):
                raise InvalidRotation(
                    f"rotation at {v} is not a permutation of its neighbors")

    def restricted_to(self, g: Graph) -> "RotationSystem":
        """Drop absent vertices and absent neighbors; preserves planarity."""
        keep = set(g.vertices)
        return RotationSystem({
            v: tuple(u for u in self.order[v] if u in keep and g.has_edge(v, u))
            for v in sorted(keep)
        })

    def replaced(self, updates: dict[int, tuple[int, ...]],
                 dropped: Iterable[int] = ()) -> "RotationSystem":
        drop = set(dropped)
        order = {v: ring for v, ring in self.order.items() if v not in drop}
        order.update(updates)
        return RotationSystem({v: order[v] for v in sorted(order)})


@dataclass(frozen=True)
class Face:
    """A face boundary: the closed walk of directed edges tracing it."""

    id: int
    boundary: tuple[tuple[int, int], ...]

    @property
    def boundary_vertices(self) -> frozenset[int]:
        return frozenset(u for u, _ in self.boundary)

    @property
    def boundary_edges(self) -> frozenset[EdgeKey]:
        return frozenset(edge_key(u, v) for u, v in self.boundary)

    def __len__(self) -> int:
        return len(self.boundary)


@dataclass(frozen=True)
class PlaneGraph:
    """A graph, the rotation system embedding it, and the derived faces."""

    graph: Graph
    rotation: RotationSystem
    faces: tuple[Face, ...]

    def face_count(self) -> int:
        return len(self.faces)

    def face_by_id(self, fid: int) -> Face:
        return self.faces[fid]

    def edge_face_map(self) -> dict[EdgeKey, tuple[int, ...]]:
        """Undirected edge -> ids of the (one or two) faces it borders."""
        out: dict[EdgeKey, list[int]] = {}
        for face in self.faces:
            for u, v in face.boundary:
                out.setdefault(edge_key(u, v), []).append(face.id)
        return {e: tuple(fids) for e, fids in out.items()}


def faces_of(g: Graph, rotation: RotationSystem) -> PlaneGraph:
    """Derive the face set of a rotation system and check Euler's relation.

    Every component contributes its own outer walk, so a planar rotation with
    c components has exactly m - n + 2c face walks (isolated vertices count
    one degenerate empty-boundary face each). Any other count means the
    rotation encodes a surface of positive genus.
    """
    rotation.validate_for(g)
    faces: list[Face] = []
    visited: set[tuple[int, int]] = set()
    darts = [(u, v) for u in g.vertices for v in rotation.order[u]]
    for start in darts:
        if start in visited:
            continue
        walk = []
        cur = start
        while cur not in visited:
            visited.add(cur)
            walk.append(cur)
            u, v = cur
            cur = (v, rotation.successor(v, u))
        if cur != start:
            raise InvalidRotation("face traversal did not close on its start")
        faces.append(Face(id=len(faces), boundary=tuple(walk)))
    for v in g.vertices:
        if g.degree(v) == 0:
            faces.append(Face(id=len(faces), boundary=()))
    c = len(connected_components(g))
    expected = g.m - g.n + 2 * c
    if len(faces) != expected:
        raise NonPlanarRotation(
            f"face count {len(faces)} != m - n + 2c = {expected}; "
            "rotation is not a plane embedding")
    return PlaneGraph(graph=g, rotation=rotation, faces=tuple(faces))


def embed(g: Graph) -> RotationSystem | None:
    """A rotation system embedding g in the plane, or None if g is non-planar.

    Deterministic for a given graph: the underlying left-right planarity test
    is fed vertices and edges in sorted order.
    """
    nxg = nx.Graph()
    nxg.add_nodes_from(g.vertices)
    nxg.add_edges_from(g.edges())
    ok, embedding = nx.check_planarity(nxg)
    if not ok:
        return None
    order = {}
    for v in g.vertices:
        if g.degree(v) == 0:
            order[v] = ()
        else:
            order[v] = tuple(embedding.neighbors_cw_order(v))
    return RotationSystem(order)


def plane_subgraph(pg: PlaneGraph, keep: Iterable[int]) -> PlaneGraph:
    """Induced plane subgraph: restrict both the graph and its rotation."""
    sub = pg.graph.subgraph(keep)
    return faces_of(sub, pg.rotation.restricted_to(sub))


# -- mergers -----------------------------------------------------------------


@dataclass(frozen=True)
class MergerSpec:
    """Three mergeable faces, their crucial vertex, and the edges a merger removes.

    ``f1`` is the middle face: it shares boundary edges with both ``f0`` and
    ``f2``. ``removed_edges`` is every edge lying on the boundary of two faces
    among the three (the union over all three unordered pairs).
    """

    f0: int
    f1: int
    f2: int
    crucial: int
    removed_edges: frozenset[EdgeKey]
    removed_weight: int


def _merger_removed_edges(pg: PlaneGraph, fids: set[int]) -> frozenset[EdgeKey]:
    removed = []
    for e, incident in pg.edge_face_map().items():
        if len(incident) == 2 and incident[0] != incident[1] \
                and set(incident) <= fids:
            removed.append(e)
    return frozenset(removed)


def find_guaranteed_merger(pg: PlaneGraph, g_min: int) -> MergerSpec | None:
    """The proof-backed merger: a face with at most two branch vertices.

    Such a face is adjacent to exactly two other faces; merging all three
    removes at least the whole boundary of the middle face, whose weight is at
    least the minimum cycle weight, so the merger is automatically nice. Ties
    are broken by smallest face id, then smallest crucial vertex id. Returns
    None when every face has three or more vertices of degree >= 3.
    """
    graph = pg.graph
    if not is_two_connected(graph):
        raise PreconditionViolated("merger search requires a 2-connected graph")
    if all(graph.degree(v) == 2 for v in graph.vertices):
        raise PreconditionViolated("merger search requires a non-cycle")
    edge_faces = pg.edge_face_map()
    for face in pg.faces:
        branch = sum(1 for v in face.boundary_vertices if graph.degree(v) >= 3)
        if branch > 2:
            continue
        neighbor_fids = set()
        for e in face.boundary_edges:
            neighbor_fids.update(edge_faces[e])
        neighbor_fids.discard(face.id)
        if len(neighbor_fids) != 2:
            raise InternalInvariantBroken(
                f"face {face.id} with <=2 branch vertices is adjacent to "
                f"{len(neighbor_fids)} faces; expected exactly 2")
        fa, fb = sorted(neighbor_fids)
        crucial = None
        for v in sorted(face.boundary_vertices):
            touches_a = touches_b = False
            for u in graph.neighbors(v):
                e = edge_key(u, v)
                if e not in face.boundary_edges:
                    continue
                other = [f for f in edge_faces[e] if f != face.id]
                if fa in other:
                    touches_a = True
                if fb in other:
                    touches_b = True
            if touches_a and touches_b:
                crucial = v
                break
        if crucial is None:
            raise InternalInvariantBroken(
                f"face {face.id}: no vertex meets both adjacent faces")
        removed = _merger_removed_edges(pg, {face.id, fa, fb})
        weight = sum(graph.weight(u, v) for u, v in removed)
        if 4 * weight < 3 * g_min:
            raise InternalInvariantBroken(
                "guaranteed merger is not nice; a cycle lighter than the "
                "minimum weight must have slipped in")
        return MergerSpec(f0=fa, f1=face.id, f2=fb, crucial=crucial,
                          removed_edges=removed, removed_weight=weight)
    return None


def find_any_nice_merger(pg: PlaneGraph, g_min: int) -> MergerSpec | None:
    """First nice merger over all mergeable face triples, in face-id order.

    Heuristic accelerator: any nice merger preserves the certified bound, not
    just the proof-backed one.
    """
    graph = pg.graph
    if not is_two_connected(graph):
        raise PreconditionViolated("merger search requires a 2-connected graph")
    edge_faces = pg.edge_face_map()
    shares: dict[tuple[int, int], bool] = {}
    for e, incident in edge_faces.items():
        if len(incident) == 2 and incident[0] != incident[1]:
            shares[tuple(sorted(incident))] = True
    vertex_faces: dict[int, set[int]] = {v: set() for v in graph.vertices}
    for face in pg.faces:
        for v in face.boundary_vertices:
            vertex_faces[v].add(face.id)
    for trio in combinations(range(len(pg.faces)), 3):
        fa, fb, fc = trio
        # Some labeling must put a middle face sharing edges with both others.
        pair_ab = shares.get((fa, fb), False)
        pair_ac = shares.get((fa, fc), False)
        pair_bc = shares.get((fb, fc), False)
        middles = []
        if pair_ab and pair_ac:
            middles.append((fb, fa, fc))
        if pair_ab and pair_bc:
            middles.append((fa, fb, fc))
        if pair_ac and pair_bc:
            middles.append((fa, fc, fb))
        if not middles:
            continue
        common = [v for v in sorted(graph.vertices)
                  if {fa, fb, fc} <= vertex_faces[v]]
        if not common:
            continue
        removed = _merger_removed_edges(pg, set(trio))
        weight = sum(graph.weight(u, v) for u, v in removed)
        if 4 * weight < 3 * g_min:
            continue
        f0, f1, f2 = middles[0]
        return MergerSpec(f0=f0, f1=f1, f2=f2, crucial=common[0],
                          removed_edges=removed, removed_weight=weight)
    return None


def apply_merger(pg: PlaneGraph, spec: MergerSpec) -> PlaneGraph:
    """Delete the merger's edges and any vertex that ends up isolated.

    Faces are recomputed from scratch; when the result stays connected and
    non-empty the face count drops by exactly 2 (three faces became one).
    """
    graph = pg.graph
    fids = {spec.f0, spec.f1, spec.f2}
    if len(fids) != 3 or any(f >= len(pg.faces) or f < 0 for f in fids):
        raise InvalidMerger("merger must name three distinct existing faces")
    b0 = pg.face_by_id(spec.f0).boundary_edges
    b1 = pg.face_by_id(spec.f1).boundary_edges
    b2 = pg.face_by_id(spec.f2).boundary_edges
    for fid in fids:
        if spec.crucial not in pg.face_by_id(fid).boundary_vertices:
            raise InvalidMerger(
                f"crucial vertex {spec.crucial} is not on the boundary of face {fid}")
    if not (b0 & b1) or not (b1 & b2):
        raise InvalidMerger("middle face must share an edge with both others")
    expected = _merger_removed_edges(pg, fids)
    if spec.removed_edges != expected:
        raise InvalidMerger("removed_edges does not match the three faces' shared edges")
    stripped = graph.without_edges(spec.removed_edges)
    isolated = [v for v in stripped.vertices if stripped.degree(v) == 0]
    new_graph = stripped.without_vertices(isolated)
    new_rotation = pg.rotation.restricted_to(new_graph)
    result = faces_of(new_graph, new_rotation)
    if new_graph.n and len(connected_components(new_graph)) == 1:
        if result.face_count() != pg.face_count() - 2:
            raise InternalInvariantBroken(
                "connected merger result must lose exactly two faces")
    return result


# -- degree surgeries ---------------------------------------------------------


def split_high_degree_vertex(pg: PlaneGraph, v: int) -> tuple[PlaneGraph, tuple[int, int, int]]:
    """Split a vertex of degree >= 4 into an adjacent pair (w, w').

    w keeps two neighbors that are consecutive in v's clockwise rotation
    (starting at the smallest-id neighbor, which keeps the result plane and
    the choice deterministic); w' keeps the rest; the new edge ww' has weight
    0. Returns the new plane graph and the (w, w', v) id mapping so
    certificates can be lifted back.
    """
    graph = pg.graph
    d = graph.degree(v)
    if d < 4:
        raise PreconditionViolated(f"vertex {v} has degree {d} < 4")
    ring = pg.rotation.order[v]
    start = ring.index(min(ring))
    seq = ring[start:] + ring[:start]
    u0, u1 = seq[0], seq[1]
    rest = seq[2:]
    top = max(graph.vertices)
    w, w_prime = top + 1, top + 2
    added = [(w, u0, graph.weight(v, u0)), (w, u1, graph.weight(v, u1)),
             (w, w_prime, 0)]
    added += [(w_prime, u, graph.weight(v, u)) for u in rest]
    new_graph = graph.rewired(drop_vertices=[v], add_edges=added)
    updates: dict[int, tuple[int, ...]] = {
        w: (u0, u1, w_prime),
        w_prime: tuple(rest) + (w,),
    }
    for u in (u0, u1):
        updates[u] = tuple(w if x == v else x for x in pg.rotation.order[u])
    for u in rest:
        updates[u] = tuple(w_prime if x == v else x for x in pg.rotation.order[u])
    result = faces_of(new_graph, pg.rotation.replaced(updates, dropped=[v]))
    if result.face_count() != pg.face_count():
        raise InternalInvariantBroken("vertex split must preserve the face count")
    return result, (w, w_prime, v)


def suppress_degree2_vertex(pg: PlaneGraph, v: int) -> PlaneGraph:
    """Replace a degree-2 vertex by a direct edge carrying the summed weight."""
    graph = pg.graph
    if graph.degree(v) != 2:
        raise PreconditionViolated(f"vertex {v} has degree {graph.degree(v)} != 2")
    u, w = graph.neighbors(v)
    if graph.has_edge(u, w):
        raise WouldCreateParallelEdge(
            f"neighbors {u}, {w} of {v} are adjacent; earlier rules should have fired")
    new_graph = graph.rewired(
        drop_vertices=[v],
        add_edges=[(u, w, graph.weight(u, v) + graph.weight(v, w))])
    updates = {
        u: tuple(w if x == v else x for x in pg.rotation.order[u]),
        w: tuple(u if x == v else x for x in pg.rotation.order[w]),
    }
    result = faces_of(new_graph, pg.rotation.replaced(updates, dropped=[v]))
    if result.face_count() != pg.face_count():
        raise InternalInvariantBroken("suppression must preserve the face count")
    return result
