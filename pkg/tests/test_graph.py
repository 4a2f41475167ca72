"""Graph core: forests, girth, connectivity, small cuts."""

import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fvsbound.errors import MemberNotInGraph, PreconditionViolated
from fvsbound.graph import (
    Graph,
    connectivity_le3,
    cut_vertices,
    girth,
    has_two_edge_cut,
    is_forest,
    is_two_connected,
    min_side_two_edge_cut,
    shortest_cycle,
    validate_fvs,
    weighted_girth,
)
from fvsbound.instances import make_named

from bruteforce import (
    _components as brute_components,
    all_two_edge_cuts,
    edge_connectivity_le3_bruteforce,
    girth_by_enumeration,
    random_max_deg3_graph,
    random_simple_graph,
    vertex_connectivity_le3_bruteforce,
    weighted_girth_by_enumeration,
)


def path_graph(n):
    return Graph(range(n), [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


K4 = make_named("k4").graph
CUBE = make_named("cube").graph
DODECA = make_named("dodecahedron").graph
PRISM = make_named("prism").graph


class TestGraphBasics:
    def test_rejects_loops(self):
        with pytest.raises(ValueError):
            Graph([0], [(0, 0)])

    def test_rejects_parallel_edges(self):
        with pytest.raises(ValueError):
            Graph([0, 1], [(0, 1), (1, 0)])

    def test_rejects_negative_weight(self):
        with pytest.raises(ValueError):
            Graph([0, 1], [(0, 1, -1)])

    def test_zero_weight_is_legal(self):
        g = Graph([0, 1], [(0, 1, 0)])
        assert g.weight(0, 1) == 0

    def test_endpoints_join_vertex_set(self):
        g = Graph([5], [(0, 1)])
        assert g.vertices == (0, 1, 5)

    def test_rewired(self):
        g = cycle_graph(5).rewired(drop_vertices=[0], add_edges=[(1, 4)])
        assert g.vertices == (1, 2, 3, 4)
        assert g.has_edge(1, 4)


class TestForestAndFvs:
    def test_empty_graph_is_forest(self):
        assert is_forest(Graph())

    def test_k4_is_not_forest(self):
        assert not is_forest(K4)

    def test_path_is_forest(self):
        assert is_forest(path_graph(5))

    def test_k4_two_vertices_suffice(self):
        assert validate_fvs(K4, {0, 1})

    def test_k4_one_vertex_leaves_triangle(self):
        assert not validate_fvs(K4, {0})

    def test_forest_needs_nothing(self):
        assert validate_fvs(path_graph(4), set())

    def test_raises_on_foreign_vertices(self):
        with pytest.raises(MemberNotInGraph):
            validate_fvs(K4, {99})

    def test_removing_everything_always_works(self):
        rng = random.Random(7)
        for _ in range(50):
            g = random_simple_graph(rng.randint(1, 8), rng)
            assert validate_fvs(g, set(g.vertices))


class TestGirth:
    def test_k4(self):
        assert girth(K4) == 3

    def test_cube(self):
        assert girth(CUBE) == 4
        assert girth_by_enumeration(CUBE) == 4

    def test_dodecahedron(self):
        assert girth(DODECA) == 5

    def test_forest_infinite(self):
        assert girth(path_graph(6)) == float("inf")

    def test_matches_enumeration_randomized(self):
        rng = random.Random(2024)
        for _ in range(300):
            g = random_simple_graph(rng.randint(1, 8), rng)
            assert girth(g) == girth_by_enumeration(g)

    def test_shortest_cycle_is_shortest(self):
        rng = random.Random(99)
        for _ in range(200):
            g = random_simple_graph(rng.randint(1, 8), rng)
            cyc = shortest_cycle(g)
            expected = girth_by_enumeration(g)
            if expected == float("inf"):
                assert cyc is None
            else:
                assert cyc is not None and len(cyc) == expected
                for i, v in enumerate(cyc):
                    assert g.has_edge(v, cyc[(i + 1) % len(cyc)])


class TestWeightedGirth:
    def test_c5_unit(self):
        assert weighted_girth(cycle_graph(5)) == 5

    def test_c4_mixed_weights(self):
        g = Graph(range(4), [(0, 1, 1), (1, 2, 2), (2, 3, 3), (3, 0, 4)])
        assert weighted_girth(g) == 10

    def test_cube_unit_matches_girth(self):
        assert weighted_girth(CUBE) == girth(CUBE) == 4

    def test_zero_weight_cycle(self):
        g = Graph(range(3), [(0, 1, 0), (1, 2, 0), (2, 0, 0)])
        assert weighted_girth(g) == 0

    def test_matches_enumeration_randomized(self):
        rng = random.Random(11)
        for _ in range(200):
            n = rng.randint(1, 7)
            base = random_simple_graph(n, rng)
            g = Graph(base.vertices,
                      [(u, v, rng.randint(0, 5)) for u, v in base.edges()])
            assert weighted_girth(g) == weighted_girth_by_enumeration(g)


@st.composite
def weighted_graphs(draw):
    n = draw(st.integers(min_value=2, max_value=8))
    pool = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pool), unique=True, max_size=len(pool)))
    weights = draw(st.lists(st.integers(0, 6),
                            min_size=len(chosen), max_size=len(chosen)))
    return Graph(range(n), [(u, v, w) for (u, v), w in zip(chosen, weights)])


class TestWeightedGirthProperties:
    @given(weighted_graphs())
    @settings(max_examples=150, deadline=None)
    def test_unit_weights_reduce_to_girth(self, g):
        unit = Graph(g.vertices, [(u, v, 1) for u, v in g.edges()])
        assert weighted_girth(unit) == girth(unit)

    @given(weighted_graphs(), st.randoms(use_true_random=False))
    @settings(max_examples=150, deadline=None)
    def test_decreasing_a_weight_never_raises_it(self, g, rnd):
        if not g.m:
            return
        u, v = rnd.choice(g.edges())
        w = g.weight(u, v)
        lowered = Graph(g.vertices,
                        [(a, b, (g.weight(a, b) if (a, b) != (u, v) else max(0, w - 1)))
                         for a, b in g.edges()])
        assert weighted_girth(lowered) <= weighted_girth(g)

    @given(weighted_graphs(), st.randoms(use_true_random=False))
    @settings(max_examples=150, deadline=None)
    def test_deleting_an_edge_never_lowers_it(self, g, rnd):
        if not g.m:
            return
        e = rnd.choice(g.edges())
        assert weighted_girth(g.without_edges([e])) >= weighted_girth(g)


class TestConnectivity:
    @pytest.mark.parametrize("builder,expected", [
        (lambda: path_graph(3), (1, 1)),
        (lambda: cycle_graph(5), (2, 2)),
        (lambda: CUBE, (3, 3)),
        (lambda: K4, (3, 3)),
        (lambda: Graph([0]), (0, 0)),
        (lambda: Graph([0, 1], [(0, 1)]), (1, 1)),
        (lambda: cycle_graph(3), (2, 2)),
        (lambda: Graph(range(4), [(0, 1), (2, 3)]), (0, 0)),
    ])
    def test_known_values(self, builder, expected):
        assert connectivity_le3(builder()) == expected

    def test_cut_vertices_bowtie(self):
        bowtie = Graph(range(5), [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
        assert cut_vertices(bowtie) == [2]

    def test_cut_vertices_cube(self):
        assert cut_vertices(CUBE) == []

    def test_cut_vertices_path(self):
        assert cut_vertices(path_graph(3)) == [1]

    def test_matches_bruteforce_randomized(self):
        rng = random.Random(5)
        for _ in range(250):
            g = random_max_deg3_graph(rng.randint(1, 9), rng)
            vc, ec = connectivity_le3(g)
            assert vc == vertex_connectivity_le3_bruteforce(g)
            assert ec == edge_connectivity_le3_bruteforce(g)

    def test_equivalence_max_degree3(self):
        # vertex and edge connectivity coincide up to 3 at max degree 3
        rng = random.Random(6)
        for _ in range(250):
            g = random_max_deg3_graph(rng.randint(1, 10), rng)
            vc, ec = connectivity_le3(g)
            assert vc == ec


class TestTwoEdgeCuts:
    def test_prism_is_three_edge_connected(self):
        assert min_side_two_edge_cut(PRISM) is None
        assert not has_two_edge_cut(PRISM)

    def test_cube_is_three_edge_connected(self):
        assert min_side_two_edge_cut(CUBE) is None

    def test_c6_min_side_is_one(self):
        cut = min_side_two_edge_cut(cycle_graph(6))
        assert cut is not None
        small, big = cut.sides
        assert len(small) == 1
        # smallest side wins ties lexicographically: vertex 0's two edges
        assert small == frozenset({0})
        assert cut.members == frozenset({(0, 1), (0, 5)})

    def test_joined_squares(self):
        # Two 4-cycles joined by two vertex-disjoint edges. The joining pair
        # is a 2-edge cut with sides of size 4, but the minimum smaller side
        # is a single degree-2 vertex, as in the C6 case.
        g = Graph(range(8), [(0, 1), (1, 2), (2, 3), (3, 0),
                             (4, 5), (5, 6), (6, 7), (7, 4),
                             (0, 4), (2, 6)])
        cuts = all_two_edge_cuts(g)
        joining = frozenset({(0, 4), (2, 6)})
        sides = dict(cuts)[joining]
        assert {len(sides[0]), len(sides[1])} == {4}
        best = min_side_two_edge_cut(g)
        assert best is not None
        assert len(best.sides[0]) == 1
        assert best.sides[0] == frozenset({1})

    def test_requires_two_edge_connected(self):
        with pytest.raises(PreconditionViolated):
            min_side_two_edge_cut(path_graph(4))

    def test_existence_matches_bruteforce(self):
        rng = random.Random(17)
        checked = 0
        while checked < 150:
            g = random_max_deg3_graph(rng.randint(4, 10), rng)
            vc, ec = connectivity_le3(g)
            if ec < 2:
                continue
            checked += 1
            assert has_two_edge_cut(g) == bool(all_two_edge_cuts(g))

    def test_min_side_matches_bruteforce(self):
        rng = random.Random(18)
        checked = 0
        while checked < 120:
            g = random_max_deg3_graph(rng.randint(4, 10), rng)
            vc, ec = connectivity_le3(g)
            if ec != 2:
                continue
            checked += 1
            cut = min_side_two_edge_cut(g)
            assert cut is not None
            expected = min(
                min(len(a), len(b)) for _, (a, b) in all_two_edge_cuts(g))
            assert len(cut.sides[0]) == expected
            # the reported members really disconnect into the reported sides
            rest = g.without_edges(cut.members)
            comps = sorted(sorted(c) for c in brute_components(rest))
            assert sorted(map(sorted, cut.sides)) == comps


class TestTwoConnected:
    def test_examples(self):
        assert is_two_connected(K4)
        assert is_two_connected(cycle_graph(3))
        assert not is_two_connected(path_graph(3))
        assert not is_two_connected(Graph([0, 1], [(0, 1)]))
