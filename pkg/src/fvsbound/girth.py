"""Feedback vertex sets for weighted plane graphs with heavy cycles.

For a plane graph whose every cycle has total edge weight at least g, the
solver certifies 3g|S| <= 4*weight(G). Rules fire in strict priority order,
each only when all earlier ones cannot:

  P0  prune degree <= 1 vertices (on no cycle),
  P1  decompose at a cut vertex or across components,
  P2  take one vertex of a lone cycle, or merge three faces around a face
      with at most two branch vertices and keep its crucial vertex,
  P3  split a vertex of degree >= 4 into an adjacent pair joined by a
      weight-0 edge,
  P4  suppress a degree-2 vertex into a summed-weight edge,
  P5  the graph is now 2-connected cubic and plane: hand off to the subcubic
      solver, whose n-bound converts into the weight bound via Euler's
      formula.

The recursion strictly shrinks (total weight, doubled degree potential)
lexicographically, which is what guarantees termination: mergers remove
weight, splits and suppressions each cost one unit of potential, and
decompositions drop whole vertex sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .certificate import BoundKind, FvsCertificate, ReductionStep
from .errors import InternalInvariantBroken, OracleTooLarge, PreconditionViolated
from .cubic import solve_cubic
from .graph import Graph, connected_components, cut_vertices, girth, is_forest, validate_fvs, weighted_girth
from .oracle import min_fvs_exact
from .planar import (
    MergerSpec,
    PlaneGraph,
    apply_merger,
    find_any_nice_merger,
    find_guaranteed_merger,
    plane_subgraph,
    split_high_degree_vertex,
    suppress_degree2_vertex,
)

MERGER_GUARANTEED = "guaranteed_only"
MERGER_ANY_NICE = "any_nice_merger"


@dataclass(frozen=True)
class SolverConfig:
    """Knobs for the weighted solver; g is the certified minimum cycle weight."""

    g: int
    validate_every_step: bool = False
    merger_mode: str = MERGER_GUARANTEED

    def __post_init__(self):
        if self.g < 3:
            raise PreconditionViolated("g must be at least 3")
        if self.merger_mode not in (MERGER_GUARANTEED, MERGER_ANY_NICE):
            raise PreconditionViolated(f"unknown merger mode {self.merger_mode!r}")


def doubled_potential(g: Graph) -> int:
    """Twice the degree potential, kept integral: sum of max(1, 2d(v) - 5)."""
    return sum(max(1, 2 * g.degree(v) - 5) for v in g.vertices)


def _measure(g: Graph) -> tuple[int, int]:
    return (g.total_weight(), doubled_potential(g))


class _Run:
    """Mutable per-solve state: trace, debug knobs, merger budget."""

    def __init__(self, cfg: SolverConfig, initial_m: int):
        self.cfg = cfg
        self.trace: list[ReductionStep] = []
        self.mergers_left = initial_m

    def check_child(self, parent_measure: tuple[int, int], child: Graph) -> None:
        if not self.cfg.validate_every_step:
            return
        if child.m and weighted_girth(child) < self.cfg.g:
            raise InternalInvariantBroken(
                "a rule produced a cycle lighter than g")
        if _measure(child) >= parent_measure:
            raise InternalInvariantBroken(
                "termination measure failed to decrease")


def solve_planar_weighted(pg: PlaneGraph, cfg: SolverConfig) -> FvsCertificate:
    """Certified set with 3g|S| <= 4*weight(G) for a plane graph with heavy cycles.

    Validates the minimum cycle weight once on entry; with
    ``cfg.validate_every_step`` it is re-checked after every rule firing,
    along with the termination measure.
    """
    graph = pg.graph
    if graph.m and weighted_girth(graph) < cfg.g:
        raise PreconditionViolated(
            f"some cycle weighs less than g = {cfg.g}")
    run = _Run(cfg, graph.m)
    fvs = _solve(pg, run)
    total = graph.total_weight()
    cert = FvsCertificate(fvs=frozenset(fvs),
                          bound_kind=BoundKind.PLANAR_WEIGHTED,
                          bound_num=4 * total, bound_den=3 * cfg.g,
                          trace=tuple(run.trace))
    if not validate_fvs(graph, cert.fvs) or not cert.meets_bound():
        raise InternalInvariantBroken("assembled set misses the weight bound")
    return cert


def _solve(pg: PlaneGraph, run: _Run) -> set[int]:
    graph = pg.graph
    if graph.n == 0:
        return set()
    parent_measure = _measure(graph)

    # P0: vertices of degree <= 1 lie on no cycle.
    degree = {v: graph.degree(v) for v in graph.vertices}
    queue = [v for v, d in degree.items() if d <= 1]
    dropped: set[int] = set()
    while queue:
        v = queue.pop()
        if v in dropped:
            continue
        dropped.add(v)
        for u in graph.neighbors(v):
            if u in dropped:
                continue
            degree[u] -= 1
            if degree[u] <= 1:
                queue.append(u)
    if dropped:
        run.trace.append(ReductionStep(
            rule="P0_prune", matched=tuple(sorted(dropped)),
            removed_vertices=frozenset(dropped)))
        if len(dropped) == graph.n:
            return set()
        pg = plane_subgraph(pg, set(graph.vertices) - dropped)
        graph = pg.graph
        run.check_child(parent_measure, graph)
        parent_measure = _measure(graph)

    # P1: decompose across components or at a cut vertex; the two sides only
    # share the cut vertex, so their sets union to a feedback vertex set.
    comps = connected_components(graph)
    if len(comps) > 1:
        side1 = comps[0]
        side2 = set(graph.vertices) - side1
        run.trace.append(ReductionStep(
            rule="P1_decompose", matched=(min(side1),),
            note="disconnected"))
        return _solve_side(pg, side1, run, parent_measure) | \
            _solve_side(pg, side2, run, parent_measure)
    cuts = cut_vertices(graph)
    if cuts:
        x = cuts[0]
        pieces = connected_components(graph.without_vertices([x]))
        side1 = pieces[0] | {x}
        side2 = (set(graph.vertices) - pieces[0])
        run.trace.append(ReductionStep(
            rule="P1_decompose", matched=(x,)))
        return _solve_side(pg, side1, run, parent_measure) | \
            _solve_side(pg, side2, run, parent_measure)

    # P2: a lone cycle needs one vertex; otherwise a guaranteed merger (or, in
    # the accelerated mode, any nice merger) trades its crucial vertex for a
    # 3g/4 drop in total weight.
    if all(graph.degree(v) == 2 for v in graph.vertices):
        v = min(graph.vertices)
        run.trace.append(ReductionStep(
            rule="P2_merge", matched=(v,), designated=(v,),
            note="single cycle"))
        return {v}
    spec = _find_merger(pg, run)
    if spec is not None:
        if 4 * spec.removed_weight < 3 * run.cfg.g:
            raise InternalInvariantBroken("merger is not nice")
        merged = apply_merger(pg, spec)
        run.trace.append(ReductionStep(
            rule="P2_merge", matched=(spec.f0, spec.f1, spec.f2),
            removed_edges=spec.removed_edges, designated=(spec.crucial,)))
        run.check_child(parent_measure, merged.graph)
        return _solve(merged, run) | {spec.crucial}

    # P3: split the smallest vertex of maximum degree >= 4.
    max_deg = graph.max_degree()
    if max_deg >= 4:
        v = min(u for u in graph.vertices if graph.degree(u) == max_deg)
        split_pg, (w, w_prime, _) = split_high_degree_vertex(pg, v)
        run.trace.append(ReductionStep(
            rule="P3_split", matched=(v, w, w_prime),
            removed_vertices=frozenset([v])))
        run.check_child(parent_measure, split_pg.graph)
        sub = _solve(split_pg, run)
        if w in sub or w_prime in sub:
            return (sub - {w, w_prime}) | {v}
        return sub

    # P4: suppress the smallest degree-2 vertex. Its neighbors cannot be
    # adjacent here: a triangle through a 2-vertex would bound a face with at
    # most two branch vertices and P2 would have fired.
    two = [v for v in graph.vertices if graph.degree(v) == 2]
    if two:
        v = two[0]
        u, w = graph.neighbors(v)
        if graph.has_edge(u, w):
            raise InternalInvariantBroken(
                "degree-2 vertex on a triangle survived past the merger rule")
        suppressed = suppress_degree2_vertex(pg, v)
        run.trace.append(ReductionStep(
            rule="P4_suppress", matched=(v, u, w),
            removed_vertices=frozenset([v]),
            added_edges=frozenset([tuple(sorted((u, w)))])))
        run.check_child(parent_measure, suppressed.graph)
        return _solve(suppressed, run)

    # P5: 2-connected cubic plane graph; the n-bound chains into the weight
    # bound through Euler's formula and the face weights.
    cert = solve_cubic(graph)
    f = pg.face_count()
    total = graph.total_weight()
    g_min = run.cfg.g
    if graph.n != 2 * (f - 2):
        raise InternalInvariantBroken("cubic plane graph violates n = 2(f-2)")
    if g_min * f > 2 * total:
        raise InternalInvariantBroken("face weights undercut g*f <= 2*weight")
    if 3 * g_min * cert.size > 4 * total:
        raise InternalInvariantBroken("cubic bound chain missed the weight bound")
    run.trace.append(ReductionStep(
        rule="P5_cubic_base", matched=(),
        removed_vertices=frozenset(graph.vertices),
        designated=tuple(sorted(cert.fvs))))
    run.trace.extend(cert.trace)
    return set(cert.fvs)


def _solve_side(pg: PlaneGraph, side: set[int], run: _Run,
                parent_measure: tuple[int, int]) -> set[int]:
    sub = plane_subgraph(pg, side)
    run.check_child(parent_measure, sub.graph)
    return _solve(sub, run)


def _find_merger(pg: PlaneGraph, run: _Run) -> MergerSpec | None:
    spec = find_guaranteed_merger(pg, run.cfg.g)
    if spec is not None:
        return spec
    if run.cfg.merger_mode == MERGER_ANY_NICE and run.mergers_left > 0:
        spec = find_any_nice_merger(pg, run.cfg.g)
        if spec is not None:
            # Cap speculative mergers at the initial edge count, then fall
            # back to proof-backed ones only.
            run.mergers_left -= 1
        return spec
    return None


def solve_planar_unweighted(pg: PlaneGraph) -> FvsCertificate:
    """Unweighted wrapper: weights 1, g = girth, certified 3*girth*|S| <= 4m."""
    graph = pg.graph
    gr = girth(graph)
    if gr == float("inf"):
        return FvsCertificate(fvs=frozenset(),
                              bound_kind=BoundKind.PLANAR_4M_OVER_3G,
                              bound_num=0, bound_den=1)
    unit = Graph(graph.vertices, [(u, v, 1) for u, v in graph.edges()])
    unit_pg = PlaneGraph(graph=unit, rotation=pg.rotation, faces=pg.faces)
    cert = solve_planar_weighted(unit_pg, SolverConfig(g=int(gr)))
    out = FvsCertificate(fvs=cert.fvs,
                         bound_kind=BoundKind.PLANAR_4M_OVER_3G,
                         bound_num=4 * graph.m, bound_den=3 * int(gr),
                         trace=cert.trace)
    if not out.validate(graph):
        raise InternalInvariantBroken("unweighted bound lost in rewrap")
    return out


def trivial_baseline(pg: PlaneGraph) -> FvsCertificate:
    """Greedy face-count reduction: remove vertices on two or more faces.

    Certifies g|S| <= 2*weight(G): each removal merges faces, and a plane
    graph with heavy cycles has at most 2*weight/g faces on its cyclic
    components.
    """
    graph = pg.graph
    total = graph.total_weight()
    wg = weighted_girth(graph)
    cur = pg
    chosen: set[int] = set()
    steps: list[ReductionStep] = []
    while not is_forest(cur.graph):
        on_faces: dict[int, set[int]] = {}
        for face in cur.faces:
            for v in face.boundary_vertices:
                on_faces.setdefault(v, set()).add(face.id)
        candidates = [v for v, fs in on_faces.items() if len(fs) >= 2]
        if not candidates:
            raise InternalInvariantBroken(
                "cyclic graph without a vertex on two faces")
        v = min(candidates)
        chosen.add(v)
        steps.append(ReductionStep(rule="baseline_remove", matched=(v,),
                                   removed_vertices=frozenset([v]),
                                   designated=(v,)))
        cur = plane_subgraph(cur, set(cur.graph.vertices) - {v})
    if wg == float("inf"):
        num, den = 2 * total, 1
    else:
        num, den = 2 * total, int(wg)
    cert = FvsCertificate(fvs=frozenset(chosen),
                          bound_kind=BoundKind.TRIVIAL_2M_OVER_G,
                          bound_num=num, bound_den=den, trace=tuple(steps))
    if not cert.validate(graph):
        raise InternalInvariantBroken("baseline missed its own bound")
    return cert


@dataclass(frozen=True)
class GapReport:
    """Exact optimum next to the three bound formulas, for conjecture probing."""

    n: int
    m: int
    girth: int
    phi: int
    m_over_g: Fraction
    four_m_over_3g: Fraction
    two_m_over_g: Fraction
    solver_size: int
    baseline_size: int


ORACLE_DEFAULT_MAX_N = 20


def conjecture_gap_report(pg: PlaneGraph,
                          oracle_max_n: int = ORACLE_DEFAULT_MAX_N) -> GapReport:
    """Measure the gap between the exact optimum and the m/g conjecture value.

    Purely empirical: reports the numbers side by side and claims nothing.
    """
    graph = pg.graph
    if graph.n > oracle_max_n:
        raise OracleTooLarge(
            f"gap report capped at n = {oracle_max_n}, got {graph.n}")
    gr = girth(graph)
    if gr == float("inf"):
        raise PreconditionViolated("gap report needs at least one cycle")
    gr = int(gr)
    result = min_fvs_exact(graph)
    if result.node_budget_hit:
        raise OracleTooLarge("oracle budget exhausted")
    solver = solve_planar_unweighted(pg)
    baseline = trivial_baseline(pg)
    return GapReport(
        n=graph.n, m=graph.m, girth=gr, phi=result.phi,
        m_over_g=Fraction(graph.m, gr),
        four_m_over_3g=Fraction(4 * graph.m, 3 * gr),
        two_m_over_g=Fraction(2 * graph.m, gr),
        solver_size=solver.size,
        baseline_size=baseline.size)
