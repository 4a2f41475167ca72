"""Exact oracle: branch-and-bound versus naive enumeration."""

import random

import pytest

from fvsbound.errors import TooLarge
from fvsbound.graph import Graph, validate_fvs
from fvsbound.instances import disjoint_cycles, make_named
from fvsbound.oracle import min_fvs_exact, min_fvs_naive

from bruteforce import random_simple_graph


def cycle_graph(n):
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


class TestKnownValues:
    @pytest.mark.parametrize("name,phi", [
        ("cube", 3), ("dodecahedron", 6), ("k33", 2),
        ("k4", 2), ("prism", 2), ("petersen", 3),
    ])
    def test_named(self, name, phi):
        g = make_named(name).graph
        result = min_fvs_exact(g)
        assert result.phi == phi
        assert not result.node_budget_hit

    @pytest.mark.parametrize("n", [3, 5, 9, 17])
    def test_cycles_need_one(self, n):
        assert min_fvs_exact(cycle_graph(n)).phi == 1

    def test_disjoint_cycles(self):
        g = disjoint_cycles(4, 5)
        assert min_fvs_exact(g).phi == 4

    def test_naive_examples(self):
        assert min_fvs_naive(make_named("k4").graph) == 2
        assert min_fvs_naive(make_named("prism").graph) == 2


class TestInvariants:
    def test_sum_rule_and_witness(self):
        rng = random.Random(13)
        for _ in range(120):
            g = random_simple_graph(rng.randint(1, 10), rng)
            result = min_fvs_exact(g)
            assert result.phi + result.forest_order == g.n
            assert validate_fvs(g, result.witness)
            assert len(result.witness) == result.phi

    def test_exact_matches_naive(self):
        rng = random.Random(14)
        for _ in range(200):
            g = random_simple_graph(rng.randint(1, 9), rng)
            assert min_fvs_exact(g).phi == min_fvs_naive(g)

    def test_deterministic(self):
        g = make_named("petersen").graph
        assert min_fvs_exact(g) == min_fvs_exact(g)


class TestLimits:
    def test_naive_size_cap(self):
        with pytest.raises(TooLarge):
            min_fvs_naive(Graph(range(13)))

    def test_budget_degrades_to_upper_bound(self):
        g = make_named("dodecahedron").graph
        truth = min_fvs_exact(g)
        squeezed = min_fvs_exact(g, node_budget=3)
        assert squeezed.node_budget_hit
        assert validate_fvs(g, squeezed.witness)
        assert squeezed.phi >= truth.phi

    def test_subcubic_bound_sanity(self):
        # the theorem's (n+2)/3 must hold for the oracle's optimum in class
        from fvsbound.instances import random_cubic_2connected
        for seed in range(20):
            g = random_cubic_2connected(10, seed)
            assert 3 * min_fvs_exact(g).phi <= g.n + 2
